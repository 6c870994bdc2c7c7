#pragma once

#include "chainport/bytes.hpp"

#include <cstdint>
#include <string>
#include <string_view>

namespace chainport {

// Canonical wire conventions: all integers big-endian, no padding, no
// alignment. Every digest in the system is computed over bytes produced
// by these writers, so the encoding must stay bit-stable.

class ByteWriter {
public:
    void u8(uint8_t v) { buf_.push_back(v); }
    void u16(uint16_t v);
    void u32(uint32_t v);
    void u64(uint64_t v);
    void i64(int64_t v); // two's-complement big-endian
    void raw(ByteView data);
    void raw(std::string_view data);

    const Bytes& bytes() const { return buf_; }
    Bytes take() { return std::move(buf_); }
    size_t size() const { return buf_.size(); }

private:
    Bytes buf_;
};

/// Bounds-checked reader; all read_* throw Error{malformed_stream} on underrun.
class ByteReader {
public:
    explicit ByteReader(ByteView data) : data_(data) {}

    uint8_t u8();
    uint16_t u16();
    uint32_t u32();
    uint64_t u64();
    int64_t i64();
    Bytes raw(size_t n);
    std::string text(size_t n);

    size_t remaining() const { return data_.size() - pos_; }
    size_t position() const { return pos_; }
    bool done() const { return pos_ == data_.size(); }

private:
    void need(size_t n) const;

    ByteView data_;
    size_t pos_ = 0;
};

} // namespace chainport
