#include "chainport/archive.hpp"

#include "chainport/codec.hpp"
#include "chainport/error.hpp"
#include "chainport/format.hpp"
#include "chainport/sha256.hpp"

namespace chainport {

namespace {

constexpr uint16_t kArchiveFormatVersion = 1;

Bytes archive_body_bytes(const ChainArchive& archive) {
    ByteWriter w;
    w.raw(std::string_view{"BCAR"});
    w.u16(kArchiveFormatVersion);
    w.raw(ByteView{archive.chain_id.bytes.data(), archive.chain_id.bytes.size()});
    w.u64(archive.expiration.height);
    w.raw(ByteView{archive.prev_archive_digest.data(), archive.prev_archive_digest.size()});
    w.u64(archive.blocks.size());
    for (const auto& block : archive.blocks) encode_block(w, block);
    return w.take();
}

} // namespace

const char* archive_fault_name(ArchiveFault fault) {
    switch (fault) {
    case ArchiveFault::digest_mismatch: return "digest-mismatch";
    case ArchiveFault::prev_link_mismatch: return "prev-link-mismatch";
    case ArchiveFault::block_integrity: return "block-integrity";
    case ArchiveFault::expiration_exceeded: return "expiration-exceeded";
    case ArchiveFault::anchor_mismatch: return "anchor-mismatch";
    }
    return "unknown";
}

const ChainArchive& ArchiveChain::at(size_t index) const {
    if (index >= archives_.size()) raise(Errc::index_out_of_range, "archive index out of range");
    return archives_[index];
}

Digest32 ArchiveChain::head_digest() const {
    return archives_.empty() ? kZeroDigest : archives_.back().archive_digest;
}

void ArchiveChain::append(ChainArchive archive) {
    if (archive.prev_archive_digest != head_digest()) {
        raise(Errc::digest_mismatch, "archive does not link from the current head");
    }
    archives_.push_back(std::move(archive));
}

ChainArchive& ArchiveChain::mutable_at_for_test(size_t index) {
    if (index >= archives_.size()) raise(Errc::index_out_of_range, "archive index out of range");
    return archives_[index];
}

ChainArchive snapshot(const Chain& chain, ExpirationHeight expiration,
                      const Digest32& prev_archive_digest) {
    if (chain.blocks().empty()) {
        raise(Errc::source_empty, "chain has no confirmed blocks to archive");
    }
    uint64_t tip = chain.blocks().back().height;
    if (expiration.height > tip) {
        raise(Errc::expiration_beyond_tip,
              "expiration " + std::to_string(expiration.height) + " beyond tip " + std::to_string(tip));
    }
    if (auto violation = chain.verify()) {
        raise(Errc::source_integrity,
              "refusing to archive: chain integrity violation at height " + std::to_string(*violation));
    }
    ChainArchive archive;
    archive.chain_id = chain.id();
    archive.expiration = expiration;
    archive.prev_archive_digest = prev_archive_digest;
    archive.blocks.assign(chain.blocks().begin(),
                          chain.blocks().begin() + static_cast<ptrdiff_t>(expiration.height + 1));
    archive.archive_digest = compute_archive_digest(archive);
    return archive;
}

Digest32 compute_archive_digest(const ChainArchive& archive) {
    return sha256(archive_body_bytes(archive));
}

Bytes archive_bytes(const ChainArchive& archive) {
    Bytes body = archive_body_bytes(archive);
    body.insert(body.end(), archive.archive_digest.begin(), archive.archive_digest.end());
    return body;
}

std::optional<ArchiveViolation> verify_archive(const ChainArchive& archive,
                                               const Digest32& expected_prev) {
    if (compute_archive_digest(archive) != archive.archive_digest) {
        return ArchiveViolation{ArchiveFault::digest_mismatch, "recomputed archive digest differs"};
    }
    if (archive.prev_archive_digest != expected_prev) {
        return ArchiveViolation{ArchiveFault::prev_link_mismatch,
                                "previous-archive link does not match expectation"};
    }
    if (archive.blocks.size() != archive.expiration.height + 1) {
        return ArchiveViolation{ArchiveFault::expiration_exceeded,
                                "block count does not cover exactly 0..=expiration"};
    }
    for (const auto& block : archive.blocks) {
        if (block.height > archive.expiration.height) {
            return ArchiveViolation{ArchiveFault::expiration_exceeded,
                                    "block beyond expiration height " +
                                        std::to_string(archive.expiration.height)};
        }
    }
    if (auto violation = verify_block_sequence(archive.blocks)) {
        return ArchiveViolation{ArchiveFault::block_integrity,
                                "block integrity violation at height " + std::to_string(*violation)};
    }
    return std::nullopt;
}

std::optional<ArchiveChainViolation> verify_archive_chain(const ArchiveChain& chain,
                                                          const Digest32& anchor) {
    Digest32 expected_prev = kZeroDigest;
    for (size_t i = 0; i < chain.size(); ++i) {
        const ChainArchive& archive = chain.archives()[i];
        if (auto violation = verify_archive(archive, expected_prev)) {
            return ArchiveChainViolation{i, violation->fault, violation->detail};
        }
        expected_prev = archive.archive_digest;
    }
    if (expected_prev != anchor) {
        return ArchiveChainViolation{chain.size(), ArchiveFault::anchor_mismatch,
                                     "archive-chain head does not match the anchor digest"};
    }
    return std::nullopt;
}

Bytes archive_write(const ChainArchive& archive) {
    return archive_bytes(archive);
}

namespace {

// Shared parser for archives and persisted chain state. Recomputes and
// checks every digest; `allow_empty` admits the zero-block chain-state case.
ChainArchive parse_archive(ByteView data, bool allow_empty) {
    if (data.size() < 32) raise(Errc::malformed_stream, "archive stream too short");
    Digest32 stored_digest;
    std::copy(data.end() - 32, data.end(), stored_digest.begin());
    ByteView body{data.data(), data.size() - 32};
    if (sha256(body) != stored_digest) {
        raise(Errc::digest_mismatch, "archive digest does not match stream contents");
    }

    ByteReader r(body);
    if (r.text(4) != "BCAR") raise(Errc::malformed_stream, "bad archive magic");
    if (r.u16() != kArchiveFormatVersion) raise(Errc::malformed_stream, "unsupported archive version");

    ChainArchive archive;
    Bytes id = r.raw(16);
    std::copy(id.begin(), id.end(), archive.chain_id.bytes.begin());
    archive.expiration.height = r.u64();
    Bytes prev = r.raw(32);
    std::copy(prev.begin(), prev.end(), archive.prev_archive_digest.begin());
    uint64_t block_count = r.u64();
    if (block_count == 0 && !allow_empty) {
        raise(Errc::malformed_stream, "archive contains no blocks");
    }
    if (block_count != 0 && block_count != archive.expiration.height + 1) {
        raise(Errc::malformed_stream, "block count does not cover 0..=expiration");
    }
    if (block_count == 0 && archive.expiration.height != 0) {
        raise(Errc::malformed_stream, "empty archive with nonzero expiration");
    }
    archive.blocks.reserve(block_count);
    for (uint64_t i = 0; i < block_count; ++i) {
        Block block = decode_block(r);
        if (block_digest(block) != block.block_digest) {
            raise(Errc::digest_mismatch,
                  "stored block digest mismatch at height " + std::to_string(block.height));
        }
        archive.blocks.push_back(std::move(block));
    }
    if (!r.done()) raise(Errc::malformed_stream, "trailing bytes after last block");
    archive.archive_digest = stored_digest;
    return archive;
}

} // namespace

ChainArchive archive_read(ByteView data) {
    return parse_archive(data, /*allow_empty=*/false);
}

Bytes chain_state_bytes(const Chain& chain) {
    ChainArchive state;
    state.chain_id = chain.id();
    state.expiration.height = chain.blocks().empty() ? 0 : chain.blocks().back().height;
    state.prev_archive_digest = kZeroDigest;
    state.blocks = chain.blocks();
    state.archive_digest = compute_archive_digest(state);
    return archive_bytes(state);
}

Chain chain_from_state_bytes(ByteView data) {
    ChainArchive state = parse_archive(data, /*allow_empty=*/true);
    if (auto violation = verify_block_sequence(state.blocks)) {
        raise(Errc::digest_mismatch,
              "persisted chain integrity violation at height " + std::to_string(*violation));
    }
    return Chain::from_blocks(state.chain_id, std::move(state.blocks));
}

} // namespace chainport
