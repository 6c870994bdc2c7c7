#pragma once

#include "chainport/bytes.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace chainport {

/// Off-chain retention policy, fixed per store instance. Overwrite keeps
/// only the latest version per key; AppendVersions keeps them all.
enum class RetentionMode : uint8_t {
    overwrite = 0,
    append_versions = 1,
};

struct StorageReport {
    uint64_t total_versions = 0;
    std::map<std::string, uint32_t> per_key_versions;
};

/// Replicated key-value store: synchronous write-all to live replicas,
/// read from the lowest-index live replica. Fault injection flips replicas
/// between live and failed; recovery resynchronizes from any live replica.
/// Single writer assumed; reads may interleave between writes.
class ReplicaSet {
public:
    ReplicaSet(uint8_t n_replicas, RetentionMode mode);

    uint8_t replica_count() const { return static_cast<uint8_t>(replicas_.size()); }
    RetentionMode mode() const { return mode_; }
    const std::set<size_t>& failed() const { return failed_; }
    size_t live_count() const { return replicas_.size() - failed_.size(); }

    /// Write value under (key, version_index) to every live replica. In
    /// Overwrite mode prior versions of the key are discarded. Writing an
    /// existing version index replaces that version. Throws unavailable
    /// when no replica is live.
    void write(const std::string& key, uint32_t version_index, ByteView value);

    /// Read from the lowest-index live replica holding the key. Omitted
    /// version means latest. Throws unavailable (no live replica) or
    /// not_found (no live replica holds it).
    Bytes read(const std::string& key, std::optional<uint32_t> version_index = {}) const;

    /// Highest version index retained for the key, or nullopt when absent.
    std::optional<uint32_t> latest_version(const std::string& key) const;

    void fail_replica(size_t index);
    /// Resynchronize from any live replica; if none is live the recovered
    /// replica comes back empty (the store's contents are gone).
    void recover_replica(size_t index);

    /// Exact retained-version counts over the lowest-index live replica.
    StorageReport report() const;

    /// Remove every key with the given prefix from all live replicas.
    void erase_prefix(const std::string& prefix);

    /// Canonical snapshot of the live view (sorted keys/versions) plus the
    /// failed set; used by universe persistence.
    Bytes state_bytes() const;
    static ReplicaSet from_state_bytes(ByteView data);

private:
    using KeyVersions = std::map<uint32_t, Bytes>;
    using ReplicaData = std::map<std::string, KeyVersions>;

    bool is_live(size_t index) const { return !failed_.contains(index); }
    const ReplicaData* first_live() const;

    std::vector<ReplicaData> replicas_;
    std::set<size_t> failed_;
    RetentionMode mode_;
};

} // namespace chainport
