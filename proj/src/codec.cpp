#include "chainport/codec.hpp"

#include "chainport/error.hpp"

namespace chainport {

void ByteWriter::u16(uint16_t v) {
    buf_.push_back(static_cast<uint8_t>(v >> 8));
    buf_.push_back(static_cast<uint8_t>(v));
}

void ByteWriter::u32(uint32_t v) {
    for (int shift = 24; shift >= 0; shift -= 8) {
        buf_.push_back(static_cast<uint8_t>(v >> shift));
    }
}

void ByteWriter::u64(uint64_t v) {
    for (int shift = 56; shift >= 0; shift -= 8) {
        buf_.push_back(static_cast<uint8_t>(v >> shift));
    }
}

void ByteWriter::i64(int64_t v) {
    u64(static_cast<uint64_t>(v));
}

void ByteWriter::raw(ByteView data) {
    buf_.insert(buf_.end(), data.begin(), data.end());
}

void ByteWriter::raw(std::string_view data) {
    buf_.insert(buf_.end(), data.begin(), data.end());
}

void ByteReader::need(size_t n) const {
    if (data_.size() - pos_ < n) {
        raise(Errc::malformed_stream, "truncated stream: need " + std::to_string(n) +
                                          " bytes at offset " + std::to_string(pos_));
    }
}

uint8_t ByteReader::u8() {
    need(1);
    return data_[pos_++];
}

uint16_t ByteReader::u16() {
    need(2);
    uint16_t v = static_cast<uint16_t>(static_cast<uint16_t>(data_[pos_]) << 8 | data_[pos_ + 1]);
    pos_ += 2;
    return v;
}

uint32_t ByteReader::u32() {
    need(4);
    uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v = (v << 8) | data_[pos_ + i];
    pos_ += 4;
    return v;
}

uint64_t ByteReader::u64() {
    need(8);
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v = (v << 8) | data_[pos_ + i];
    pos_ += 8;
    return v;
}

int64_t ByteReader::i64() {
    return static_cast<int64_t>(u64());
}

Bytes ByteReader::raw(size_t n) {
    need(n);
    Bytes out(data_.begin() + static_cast<ptrdiff_t>(pos_),
              data_.begin() + static_cast<ptrdiff_t>(pos_ + n));
    pos_ += n;
    return out;
}

std::string ByteReader::text(size_t n) {
    need(n);
    std::string out(reinterpret_cast<const char*>(data_.data() + pos_), n);
    pos_ += n;
    return out;
}

} // namespace chainport
