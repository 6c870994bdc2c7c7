#pragma once

#include "chainport/bytes.hpp"

namespace chainport {

/// Streaming SHA-256 (OpenSSL EVP behind the scenes).
class Sha256 {
public:
    Sha256();
    ~Sha256();
    Sha256(const Sha256&) = delete;
    Sha256& operator=(const Sha256&) = delete;

    void update(ByteView data);
    Digest32 finish();

private:
    void* ctx_; // EVP_MD_CTX*
};

Digest32 sha256(ByteView data);

} // namespace chainport
