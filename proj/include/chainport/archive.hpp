#pragma once

#include "chainport/chain.hpp"

#include <optional>
#include <string>
#include <vector>

namespace chainport {

/// Block height at which a source chain's authority ends. Set just before
/// migration; everything above it is never archived and never trusted.
struct ExpirationHeight {
    uint64_t height = 0;
};

/// A static, truncated copy of a chain: blocks 0..=expiration plus a digest
/// link to the previous archive. Immutable once built; the archive_digest
/// seals the canonical byte stream (file layout below, digest excluded).
///
///   BCAR | version u16 = 1 | chain_id 16 | expiration u64
///        | prev_archive_digest 32 | block_count u64 | blocks...
///        | archive_digest 32  (SHA-256 of all preceding bytes)
struct ChainArchive {
    ChainId chain_id;
    ExpirationHeight expiration;
    Digest32 prev_archive_digest{};
    std::vector<Block> blocks;
    Digest32 archive_digest{};
};

enum class ArchiveFault {
    digest_mismatch,
    prev_link_mismatch,
    block_integrity,
    expiration_exceeded,
    anchor_mismatch,
};

const char* archive_fault_name(ArchiveFault fault);

struct ArchiveViolation {
    ArchiveFault fault;
    std::string detail;
};

struct ArchiveChainViolation {
    size_t position; // == archive count when the head/anchor check fails
    ArchiveFault fault;
    std::string detail;
};

/// Hash chain of successive archives. archives[0] links from the zero
/// digest; each later archive links from its predecessor's digest.
class ArchiveChain {
public:
    const std::vector<ChainArchive>& archives() const { return archives_; }
    size_t size() const { return archives_.size(); }
    bool empty() const { return archives_.empty(); }
    const ChainArchive& at(size_t index) const;

    /// Head of the hash chain: last archive's digest, or zero when empty.
    Digest32 head_digest() const;

    /// Append an archive whose prev_archive_digest must equal the current
    /// head. Throws digest_mismatch otherwise.
    void append(ChainArchive archive);

    /// Test access: mutate an archive in place (digests intentionally left
    /// stale so verification can be exercised).
    ChainArchive& mutable_at_for_test(size_t index);

private:
    std::vector<ChainArchive> archives_;
};

/// Truncated snapshot of a live chain. Refuses when the expiration exceeds
/// the confirmed tip (expiration_beyond_tip), the chain has no confirmed
/// blocks (source_empty), or the chain fails verification (source_integrity).
/// Pending entries are never captured.
ChainArchive snapshot(const Chain& chain, ExpirationHeight expiration,
                      const Digest32& prev_archive_digest);

/// Full archive check: recomputed archive digest, expected previous link,
/// internal block integrity, and the expiration bound. Nullopt when intact.
std::optional<ArchiveViolation> verify_archive(const ChainArchive& archive,
                                               const Digest32& expected_prev);

/// Pairwise-verify every archive and require head == anchor. Reports the
/// lowest violating position (== size() for the head/anchor failure).
std::optional<ArchiveChainViolation> verify_archive_chain(const ArchiveChain& chain,
                                                          const Digest32& anchor);

/// Canonical byte stream of the archive, trailing digest included.
Bytes archive_bytes(const ChainArchive& archive);

/// Recomputed digest over the archive's canonical bytes (excluding the
/// stored trailing digest).
Digest32 compute_archive_digest(const ChainArchive& archive);

Bytes archive_write(const ChainArchive& archive);

/// Parse and re-verify: stored block digests and the trailing archive
/// digest are recomputed and must match (digest_mismatch), the layout must
/// be well-formed (malformed_stream), and blocks must be 0..=expiration.
ChainArchive archive_read(ByteView data);

// Live-chain persistence reuses the archive layout (expiration = tip
// height; a chain with no confirmed blocks is stored with block_count 0).
Bytes chain_state_bytes(const Chain& chain);
Chain chain_from_state_bytes(ByteView data);

} // namespace chainport
