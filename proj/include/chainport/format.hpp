#pragma once

#include "chainport/chain.hpp"
#include "chainport/codec.hpp"

namespace chainport {

// Canonical binary layouts (all integers big-endian). These bytes define
// every digest in the system, so live chains, archives, and proofs are
// digest-compatible by construction.
//
//   entry  = key_len u16 | key | payload_tag u8 | payload body | wall_clock u64
//            payload body: tag 0 (NumberList) = count u32, then each value i64
//                          tag 1 (Bytes)      = len u32, then bytes
//            entry_digest = SHA-256(entry bytes); not part of the stream
//   block  = height u64 | prev_digest 32 | wall_clock u64 | entry_count u32
//            | entries... | block_digest 32
//            block_digest = SHA-256 of the block's preceding bytes

void encode_payload(ByteWriter& w, const Payload& payload);
Payload decode_payload(ByteReader& r);

/// Digest of the payload's canonical bytes (tag + body); the value an
/// existence claim commits to.
Digest32 payload_digest(const Payload& payload);

void encode_entry(ByteWriter& w, const LedgerEntry& entry);
Bytes entry_bytes(const LedgerEntry& entry);
Digest32 entry_digest(const LedgerEntry& entry);

/// Block bytes up to but excluding the trailing block_digest.
Bytes block_body_bytes(const Block& block);
Digest32 block_digest(const Block& block);

/// Full block record: body followed by the stored block_digest.
void encode_block(ByteWriter& w, const Block& block);

/// Decode one block record. Entry digests and logical times are
/// reconstructed; stored digests are NOT checked here (verification is the
/// caller's separate step).
Block decode_block(ByteReader& r);

} // namespace chainport
