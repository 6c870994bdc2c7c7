#include "chainport/error.hpp"

namespace chainport {

const char* errc_name(Errc code) {
    switch (code) {
    case Errc::key_invalid: return "key-invalid";
    case Errc::key_too_long: return "key-too-long";
    case Errc::payload_too_large: return "payload-too-large";
    case Errc::non_monotonic_clock: return "non-monotonic-clock";
    case Errc::duplicate_app: return "duplicate-app";
    case Errc::store_required: return "store-required";
    case Errc::store_mismatch: return "store-mismatch";
    case Errc::migrated_away: return "migrated-away";
    case Errc::unavailable: return "unavailable";
    case Errc::not_found: return "not-found";
    case Errc::digest_mismatch: return "digest-mismatch";
    case Errc::history_disabled: return "history-disabled";
    case Errc::decode_error: return "decode-error";
    case Errc::numeric_overflow: return "overflow";
    case Errc::expiration_beyond_tip: return "expiration-beyond-tip";
    case Errc::source_integrity: return "source-integrity";
    case Errc::source_empty: return "source-empty";
    case Errc::attestation_required: return "attestation-required";
    case Errc::checkpoint_unsupported: return "checkpoint-unsupported";
    case Errc::version_unknown: return "version-unknown";
    case Errc::index_out_of_range: return "index-out-of-range";
    case Errc::malformed_stream: return "malformed-stream";
    case Errc::universe_error: return "universe-error";
    }
    return "unknown";
}

} // namespace chainport
