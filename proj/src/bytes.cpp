#include "chainport/bytes.hpp"

namespace chainport {

namespace {

constexpr char kHexDigits[] = "0123456789abcdef";

int hex_nibble(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

} // namespace

std::string to_hex(ByteView data) {
    std::string out;
    out.reserve(data.size() * 2);
    for (uint8_t b : data) {
        out.push_back(kHexDigits[b >> 4]);
        out.push_back(kHexDigits[b & 0x0f]);
    }
    return out;
}

std::string to_hex(const Digest32& digest) {
    return to_hex(ByteView{digest.data(), digest.size()});
}

std::optional<Bytes> from_hex(std::string_view hex) {
    if (hex.size() % 2 != 0) return std::nullopt;
    Bytes out;
    out.reserve(hex.size() / 2);
    for (size_t i = 0; i < hex.size(); i += 2) {
        int hi = hex_nibble(hex[i]);
        int lo = hex_nibble(hex[i + 1]);
        if (hi < 0 || lo < 0) return std::nullopt;
        out.push_back(static_cast<uint8_t>((hi << 4) | lo));
    }
    return out;
}

std::optional<Digest32> digest_from_hex(std::string_view hex) {
    auto bytes = from_hex(hex);
    if (!bytes || bytes->size() != 32) return std::nullopt;
    Digest32 d;
    std::copy(bytes->begin(), bytes->end(), d.begin());
    return d;
}

Bytes to_bytes(std::string_view text) {
    return Bytes(text.begin(), text.end());
}

bool is_valid_utf8(std::string_view data) {
    size_t i = 0;
    const size_t n = data.size();
    while (i < n) {
        uint8_t b0 = static_cast<uint8_t>(data[i]);
        if (b0 < 0x80) {
            ++i;
            continue;
        }
        size_t len;
        uint32_t cp;
        if ((b0 & 0xe0) == 0xc0) {
            len = 2;
            cp = b0 & 0x1f;
        } else if ((b0 & 0xf0) == 0xe0) {
            len = 3;
            cp = b0 & 0x0f;
        } else if ((b0 & 0xf8) == 0xf0) {
            len = 4;
            cp = b0 & 0x07;
        } else {
            return false;
        }
        if (i + len > n) return false;
        for (size_t k = 1; k < len; ++k) {
            uint8_t bk = static_cast<uint8_t>(data[i + k]);
            if ((bk & 0xc0) != 0x80) return false;
            cp = (cp << 6) | (bk & 0x3f);
        }
        // overlong encodings, surrogates, and out-of-range code points
        if (len == 2 && cp < 0x80) return false;
        if (len == 3 && cp < 0x800) return false;
        if (len == 4 && cp < 0x10000) return false;
        if (cp >= 0xd800 && cp <= 0xdfff) return false;
        if (cp > 0x10ffff) return false;
        i += len;
    }
    return true;
}

} // namespace chainport
