#include "chainport/chain.hpp"

#include "chainport/codec.hpp"
#include "chainport/error.hpp"
#include "chainport/format.hpp"
#include "chainport/sha256.hpp"

#include <algorithm>

namespace chainport {

namespace {
constexpr uint32_t kMaxU32 = 0xffffffffu;
}

std::string ChainId::hex() const {
    return to_hex(ByteView{bytes.data(), bytes.size()});
}

std::optional<ChainId> ChainId::from_hex(std::string_view hex) {
    auto raw = chainport::from_hex(hex);
    if (!raw || raw->size() != 16) return std::nullopt;
    ChainId id;
    std::copy(raw->begin(), raw->end(), id.bytes.begin());
    return id;
}

ChainId ChainId::derive(uint64_t seed, std::string_view name) {
    ByteWriter w;
    w.raw(std::string_view{"chainport.chain-id"});
    w.u64(seed);
    w.raw(name);
    Digest32 d = sha256(w.bytes());
    ChainId id;
    std::copy(d.begin(), d.begin() + 16, id.bytes.begin());
    return id;
}

Payload Payload::numbers(std::vector<int64_t> values) {
    if (values.size() > kMaxU32) {
        raise(Errc::payload_too_large, "number list exceeds u32 count range");
    }
    return Payload{NumberList{std::move(values)}};
}

Payload Payload::bytes(Bytes data) {
    if (data.size() > kMaxU32) {
        raise(Errc::payload_too_large, "byte payload exceeds u32 length range");
    }
    return Payload{std::move(data)};
}

void RecordKey::validate(std::string_view key) {
    if (key.empty()) raise(Errc::key_invalid, "key must be non-empty");
    if (key.size() > kMaxKeyBytes) {
        raise(Errc::key_too_long, "key exceeds " + std::to_string(kMaxKeyBytes) + " bytes");
    }
    if (!is_valid_utf8(key)) raise(Errc::key_invalid, "key is not valid UTF-8");
}

PendingReceipt Chain::submit(std::string_view key, Payload payload, uint64_t wall_clock_ms) {
    RecordKey::validate(key);
    pending_.push_back(PendingEntry{std::string(key), std::move(payload), wall_clock_ms});
    return PendingReceipt{pending_.size() - 1};
}

void Chain::drop_last_pending() {
    if (!pending_.empty()) pending_.pop_back();
}

const Block& Chain::confirm(uint64_t wall_clock_ms) {
    if (!blocks_.empty() && wall_clock_ms < blocks_.back().wall_clock_ms) {
        raise(Errc::non_monotonic_clock,
              "block clock " + std::to_string(wall_clock_ms) + " precedes previous block at " +
                  std::to_string(blocks_.back().wall_clock_ms));
    }
    Block block;
    block.height = blocks_.size();
    block.prev_digest = blocks_.empty() ? kZeroDigest : blocks_.back().block_digest;
    block.wall_clock_ms = wall_clock_ms;
    block.entries.reserve(pending_.size());
    uint32_t index = 0;
    for (auto& pending : pending_) {
        LedgerEntry entry;
        entry.key.text = std::move(pending.key);
        entry.payload = std::move(pending.payload);
        entry.wall_clock_ms = pending.wall_clock_ms;
        entry.at = LogicalTime{block.height, index++};
        entry.entry_digest = entry_digest(entry);
        block.entries.push_back(std::move(entry));
    }
    pending_.clear();
    block.block_digest = block_digest(block);
    blocks_.push_back(std::move(block));
    return blocks_.back();
}

std::vector<LedgerEntry> Chain::entries_for(std::string_view key) const {
    std::vector<LedgerEntry> out;
    for (const auto& block : blocks_) {
        for (const auto& entry : block.entries) {
            if (entry.key.text == key) out.push_back(entry);
        }
    }
    return out; // blocks and entries are stored in logical order already
}

std::optional<uint64_t> Chain::verify() const {
    return verify_block_sequence(blocks_);
}

std::optional<uint64_t> verify_block_sequence(const std::vector<Block>& blocks) {
    for (size_t k = 0; k < blocks.size(); ++k) {
        const Block& block = blocks[k];
        if (block.height != k) return k;
        const Digest32& expected_prev = (k == 0) ? kZeroDigest : blocks[k - 1].block_digest;
        if (block.prev_digest != expected_prev) return k;
        for (size_t i = 0; i < block.entries.size(); ++i) {
            const LedgerEntry& entry = block.entries[i];
            if (entry.at.height != block.height || entry.at.index != i) return k;
            if (entry_digest(entry) != entry.entry_digest) return k;
        }
        if (block_digest(block) != block.block_digest) return k;
    }
    return std::nullopt;
}

void Chain::replace_block_for_test(size_t height, Block block) {
    if (height >= blocks_.size()) raise(Errc::index_out_of_range, "no block at that height");
    blocks_[height] = std::move(block);
}

Chain Chain::from_blocks(ChainId id, std::vector<Block> blocks) {
    Chain chain(id);
    chain.blocks_ = std::move(blocks);
    return chain;
}

} // namespace chainport
