#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace chainport {

using Bytes = std::vector<uint8_t>;
using ByteView = std::span<const uint8_t>;

/// 32-byte SHA-256 digest value.
using Digest32 = std::array<uint8_t, 32>;

inline constexpr Digest32 kZeroDigest{};

std::string to_hex(ByteView data);
std::string to_hex(const Digest32& digest);

/// Strict lowercase/uppercase hex decode; rejects odd length and non-hex chars.
std::optional<Bytes> from_hex(std::string_view hex);
std::optional<Digest32> digest_from_hex(std::string_view hex);

Bytes to_bytes(std::string_view text);

/// True iff `data` is a well-formed UTF-8 sequence (rejects overlongs,
/// surrogates, and code points past U+10FFFF).
bool is_valid_utf8(std::string_view data);

} // namespace chainport
