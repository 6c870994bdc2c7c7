#pragma once

#include "chainport/bytes.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace chainport {

/// 16-byte opaque chain identifier, fixed at chain creation.
struct ChainId {
    std::array<uint8_t, 16> bytes{};

    bool operator==(const ChainId&) const = default;

    std::string hex() const;
    static std::optional<ChainId> from_hex(std::string_view hex);
    /// Deterministic id derivation for named chains: first 16 bytes of
    /// SHA-256("chainport.chain-id" | seed | name).
    static ChainId derive(uint64_t seed, std::string_view name);
};

struct NumberList {
    std::vector<int64_t> values;
    bool operator==(const NumberList&) const = default;
};

/// The payload a chain is asked to store: a list of signed integers or a
/// byte sequence. This is the whole storage interface an application may
/// assume from any chain.
struct Payload {
    std::variant<NumberList, Bytes> value;

    static Payload numbers(std::vector<int64_t> values);
    static Payload bytes(Bytes data);

    bool is_numbers() const { return value.index() == 0; }
    bool is_bytes() const { return value.index() == 1; }
    const NumberList& as_numbers() const { return std::get<NumberList>(value); }
    const Bytes& as_bytes() const { return std::get<Bytes>(value); }

    bool operator==(const Payload&) const = default;
};

inline constexpr size_t kMaxKeyBytes = 1024;

/// UTF-8 key, 1..=1024 bytes. `validate` throws Error{key_invalid|key_too_long}.
struct RecordKey {
    std::string text;

    static void validate(std::string_view key);
    bool operator==(const RecordKey&) const = default;
};

/// Block-height/intra-block position; the only timestamp proofs trust.
struct LogicalTime {
    uint64_t height = 0;
    uint32_t index = 0;

    auto operator<=>(const LogicalTime&) const = default;
};

struct LedgerEntry {
    RecordKey key;
    Payload payload;
    uint64_t wall_clock_ms = 0;
    LogicalTime at;        // assigned exactly once, at confirmation
    Digest32 entry_digest; // SHA-256 of the entry's canonical bytes
};

struct Block {
    uint64_t height = 0;
    Digest32 prev_digest{};
    uint64_t wall_clock_ms = 0;
    std::vector<LedgerEntry> entries;
    Digest32 block_digest{};
};

struct PendingReceipt {
    size_t position = 0;
};

/// Deterministic in-process blockchain: submitted entries sit in a pending
/// pool until an explicit confirm drains them into the next digest-linked
/// block. Confirmed blocks are immutable. Not internally synchronized;
/// concurrent mutation must be serialized by the caller.
class Chain {
public:
    explicit Chain(ChainId id) : id_(id) {}

    const ChainId& id() const { return id_; }
    const std::vector<Block>& blocks() const { return blocks_; }
    size_t pending_count() const { return pending_.size(); }

    /// Queue an entry for the next block. FIFO; receipt carries the pool position.
    PendingReceipt submit(std::string_view key, Payload payload, uint64_t wall_clock_ms);

    /// Drop the most recently submitted pending entry. Used to unwind a
    /// submission whose enclosing operation failed before confirmation.
    void drop_last_pending();

    /// Drain the pending pool into a new block. An empty pool yields an
    /// empty block (heights stay contiguous). Throws non_monotonic_clock if
    /// wall_clock_ms precedes the previous block's timestamp.
    const Block& confirm(uint64_t wall_clock_ms);

    /// All confirmed entries with the exact key, ordered by (height, index).
    /// Pending entries are never returned.
    std::vector<LedgerEntry> entries_for(std::string_view key) const;

    /// Recompute every digest and link. Returns the lowest height at which
    /// the chain deviates from its recorded digests, or nullopt when intact.
    std::optional<uint64_t> verify() const;

    /// Test/loader access: replace a confirmed block wholesale. Digests are
    /// not recomputed, so verify() will report the mutation.
    void replace_block_for_test(size_t height, Block block);

    /// Loader access: adopt fully formed blocks (universe persistence path).
    static Chain from_blocks(ChainId id, std::vector<Block> blocks);

private:
    struct PendingEntry {
        std::string key;
        Payload payload;
        uint64_t wall_clock_ms;
    };

    ChainId id_;
    std::vector<Block> blocks_;
    std::vector<PendingEntry> pending_;
};

/// Lowest-height integrity violation over a free-standing block sequence
/// (shared by live-chain verify and archive verify).
std::optional<uint64_t> verify_block_sequence(const std::vector<Block>& blocks);

} // namespace chainport
