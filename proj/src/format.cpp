#include "chainport/format.hpp"

#include "chainport/error.hpp"
#include "chainport/sha256.hpp"

namespace chainport {

namespace {
constexpr uint8_t kTagNumberList = 0;
constexpr uint8_t kTagBytes = 1;
} // namespace

void encode_payload(ByteWriter& w, const Payload& payload) {
    if (payload.is_numbers()) {
        const auto& values = payload.as_numbers().values;
        w.u8(kTagNumberList);
        w.u32(static_cast<uint32_t>(values.size()));
        for (int64_t v : values) w.i64(v);
    } else {
        const auto& data = payload.as_bytes();
        w.u8(kTagBytes);
        w.u32(static_cast<uint32_t>(data.size()));
        w.raw(data);
    }
}

Payload decode_payload(ByteReader& r) {
    uint8_t tag = r.u8();
    if (tag == kTagNumberList) {
        uint32_t count = r.u32();
        std::vector<int64_t> values;
        values.reserve(count);
        for (uint32_t i = 0; i < count; ++i) values.push_back(r.i64());
        return Payload::numbers(std::move(values));
    }
    if (tag == kTagBytes) {
        uint32_t len = r.u32();
        return Payload::bytes(r.raw(len));
    }
    raise(Errc::malformed_stream, "unknown payload tag " + std::to_string(tag));
}

Digest32 payload_digest(const Payload& payload) {
    ByteWriter w;
    encode_payload(w, payload);
    return sha256(w.bytes());
}

void encode_entry(ByteWriter& w, const LedgerEntry& entry) {
    w.u16(static_cast<uint16_t>(entry.key.text.size()));
    w.raw(entry.key.text);
    encode_payload(w, entry.payload);
    w.u64(entry.wall_clock_ms);
}

Bytes entry_bytes(const LedgerEntry& entry) {
    ByteWriter w;
    encode_entry(w, entry);
    return w.take();
}

Digest32 entry_digest(const LedgerEntry& entry) {
    return sha256(entry_bytes(entry));
}

Bytes block_body_bytes(const Block& block) {
    ByteWriter w;
    w.u64(block.height);
    w.raw(ByteView{block.prev_digest.data(), block.prev_digest.size()});
    w.u64(block.wall_clock_ms);
    w.u32(static_cast<uint32_t>(block.entries.size()));
    for (const auto& entry : block.entries) encode_entry(w, entry);
    return w.take();
}

Digest32 block_digest(const Block& block) {
    return sha256(block_body_bytes(block));
}

void encode_block(ByteWriter& w, const Block& block) {
    w.raw(block_body_bytes(block));
    w.raw(ByteView{block.block_digest.data(), block.block_digest.size()});
}

Block decode_block(ByteReader& r) {
    Block block;
    block.height = r.u64();
    auto prev = r.raw(32);
    std::copy(prev.begin(), prev.end(), block.prev_digest.begin());
    block.wall_clock_ms = r.u64();
    uint32_t entry_count = r.u32();
    block.entries.reserve(entry_count);
    for (uint32_t i = 0; i < entry_count; ++i) {
        LedgerEntry entry;
        uint16_t key_len = r.u16();
        entry.key.text = r.text(key_len);
        entry.payload = decode_payload(r);
        entry.wall_clock_ms = r.u64();
        entry.at = LogicalTime{block.height, i};
        entry.entry_digest = entry_digest(entry);
        block.entries.push_back(std::move(entry));
    }
    auto stored = r.raw(32);
    std::copy(stored.begin(), stored.end(), block.block_digest.begin());
    return block;
}

} // namespace chainport
