#pragma once

#include <stdexcept>
#include <string>

namespace chainport {

/// Operation failure codes. Verification verdicts (integrity violations,
/// proof rejections) are return values, not errors; these codes cover
/// contract violations and environmental failures only.
enum class Errc {
    key_invalid,
    key_too_long,
    payload_too_large,
    non_monotonic_clock,
    duplicate_app,
    store_required,
    store_mismatch,
    migrated_away,
    unavailable,
    not_found,
    digest_mismatch,
    history_disabled,
    decode_error,
    numeric_overflow,
    expiration_beyond_tip,
    source_integrity,
    source_empty,
    attestation_required,
    checkpoint_unsupported,
    version_unknown,
    index_out_of_range,
    malformed_stream,
    universe_error,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    Errc code() const { return code_; }
    const char* code_name() const { return errc_name(code_); }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message) {
    throw Error(code, message);
}

} // namespace chainport
