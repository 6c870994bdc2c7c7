#include "chainport/sha256.hpp"

#include <openssl/evp.h>

#include <stdexcept>

namespace chainport {

Sha256::Sha256() : ctx_(EVP_MD_CTX_new()) {
    if (!ctx_ || EVP_DigestInit_ex(static_cast<EVP_MD_CTX*>(ctx_), EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("sha256: digest init failed");
    }
}

Sha256::~Sha256() {
    EVP_MD_CTX_free(static_cast<EVP_MD_CTX*>(ctx_));
}

void Sha256::update(ByteView data) {
    if (EVP_DigestUpdate(static_cast<EVP_MD_CTX*>(ctx_), data.data(), data.size()) != 1) {
        throw std::runtime_error("sha256: digest update failed");
    }
}

Digest32 Sha256::finish() {
    Digest32 out{};
    unsigned int len = 0;
    if (EVP_DigestFinal_ex(static_cast<EVP_MD_CTX*>(ctx_), out.data(), &len) != 1 || len != 32) {
        throw std::runtime_error("sha256: digest final failed");
    }
    return out;
}

Digest32 sha256(ByteView data) {
    Sha256 h;
    h.update(data);
    return h.finish();
}

} // namespace chainport
