#include "chainport/store.hpp"

#include "chainport/codec.hpp"
#include "chainport/error.hpp"
#include "chainport/sha256.hpp"

namespace chainport {

ReplicaSet::ReplicaSet(uint8_t n_replicas, RetentionMode mode) : mode_(mode) {
    if (n_replicas == 0) raise(Errc::index_out_of_range, "replica set needs at least one replica");
    replicas_.resize(n_replicas);
}

const ReplicaSet::ReplicaData* ReplicaSet::first_live() const {
    for (size_t i = 0; i < replicas_.size(); ++i) {
        if (is_live(i)) return &replicas_[i];
    }
    return nullptr;
}

void ReplicaSet::write(const std::string& key, uint32_t version_index, ByteView value) {
    if (live_count() == 0) raise(Errc::unavailable, "all replicas failed");
    for (size_t i = 0; i < replicas_.size(); ++i) {
        if (!is_live(i)) continue;
        KeyVersions& versions = replicas_[i][key];
        if (mode_ == RetentionMode::overwrite) versions.clear();
        versions.insert_or_assign(version_index, Bytes(value.begin(), value.end()));
    }
}

Bytes ReplicaSet::read(const std::string& key, std::optional<uint32_t> version_index) const {
    if (live_count() == 0) raise(Errc::unavailable, "all replicas failed");
    for (size_t i = 0; i < replicas_.size(); ++i) {
        if (!is_live(i)) continue;
        const ReplicaData& data = replicas_[i];
        auto key_it = data.find(key);
        if (key_it == data.end() || key_it->second.empty()) continue;
        if (!version_index) return key_it->second.rbegin()->second;
        auto ver_it = key_it->second.find(*version_index);
        if (ver_it != key_it->second.end()) return ver_it->second;
    }
    raise(Errc::not_found, "no live replica holds key '" + key + "'" +
                               (version_index ? " version " + std::to_string(*version_index) : ""));
}

std::optional<uint32_t> ReplicaSet::latest_version(const std::string& key) const {
    if (live_count() == 0) raise(Errc::unavailable, "all replicas failed");
    for (size_t i = 0; i < replicas_.size(); ++i) {
        if (!is_live(i)) continue;
        auto key_it = replicas_[i].find(key);
        if (key_it != replicas_[i].end() && !key_it->second.empty()) {
            return key_it->second.rbegin()->first;
        }
    }
    return std::nullopt;
}

void ReplicaSet::fail_replica(size_t index) {
    if (index >= replicas_.size()) raise(Errc::index_out_of_range, "replica index out of range");
    failed_.insert(index); // failing twice is idempotent
}

void ReplicaSet::recover_replica(size_t index) {
    if (index >= replicas_.size()) raise(Errc::index_out_of_range, "replica index out of range");
    if (!failed_.contains(index)) return; // recovering a live replica is a no-op
    failed_.erase(index);
    const ReplicaData* source = nullptr;
    for (size_t i = 0; i < replicas_.size(); ++i) {
        if (i != index && is_live(i)) {
            source = &replicas_[i];
            break;
        }
    }
    replicas_[index] = source ? *source : ReplicaData{};
}

StorageReport ReplicaSet::report() const {
    const ReplicaData* view = first_live();
    if (!view) raise(Errc::unavailable, "all replicas failed");
    StorageReport r;
    for (const auto& [key, versions] : *view) {
        if (versions.empty()) continue;
        r.per_key_versions[key] = static_cast<uint32_t>(versions.size());
        r.total_versions += versions.size();
    }
    return r;
}

void ReplicaSet::erase_prefix(const std::string& prefix) {
    for (size_t i = 0; i < replicas_.size(); ++i) {
        if (!is_live(i)) continue;
        auto& data = replicas_[i];
        for (auto it = data.lower_bound(prefix); it != data.end() && it->first.starts_with(prefix);) {
            it = data.erase(it);
        }
    }
}

Bytes ReplicaSet::state_bytes() const {
    // Live replicas are identical by invariant, so one view plus the failed
    // set captures the observable state.
    ByteWriter w;
    w.raw(std::string_view{"BCST"});
    w.u16(1);
    w.u8(static_cast<uint8_t>(replicas_.size()));
    w.u8(static_cast<uint8_t>(mode_));
    w.u8(static_cast<uint8_t>(failed_.size()));
    for (size_t idx : failed_) w.u8(static_cast<uint8_t>(idx));
    const ReplicaData* view = first_live();
    static const ReplicaData kEmpty;
    if (!view) view = &kEmpty; // all failed: contents are unreachable and lost
    w.u64(view->size());
    for (const auto& [key, versions] : *view) {
        w.u16(static_cast<uint16_t>(key.size()));
        w.raw(key);
        w.u32(static_cast<uint32_t>(versions.size()));
        for (const auto& [index, value] : versions) {
            w.u32(index);
            w.u32(static_cast<uint32_t>(value.size()));
            w.raw(value);
        }
    }
    Digest32 d = sha256(w.bytes());
    w.raw(ByteView{d.data(), d.size()});
    return w.take();
}

ReplicaSet ReplicaSet::from_state_bytes(ByteView data) {
    if (data.size() < 32) raise(Errc::malformed_stream, "store state too short");
    Digest32 stored;
    std::copy(data.end() - 32, data.end(), stored.begin());
    ByteView body{data.data(), data.size() - 32};
    if (sha256(body) != stored) raise(Errc::digest_mismatch, "store state digest mismatch");

    ByteReader r(body);
    if (r.text(4) != "BCST") raise(Errc::malformed_stream, "bad store state magic");
    if (r.u16() != 1) raise(Errc::malformed_stream, "unsupported store state version");
    uint8_t n = r.u8();
    auto mode = static_cast<RetentionMode>(r.u8());
    if (mode != RetentionMode::overwrite && mode != RetentionMode::append_versions) {
        raise(Errc::malformed_stream, "bad retention mode");
    }
    ReplicaSet set(n, mode);
    uint8_t failed_count = r.u8();
    for (uint8_t i = 0; i < failed_count; ++i) {
        uint8_t idx = r.u8();
        if (idx >= n) raise(Errc::malformed_stream, "failed index out of range");
        set.failed_.insert(idx);
    }
    ReplicaData view;
    uint64_t key_count = r.u64();
    for (uint64_t k = 0; k < key_count; ++k) {
        std::string key = r.text(r.u16());
        uint32_t version_count = r.u32();
        KeyVersions versions;
        for (uint32_t v = 0; v < version_count; ++v) {
            uint32_t index = r.u32();
            uint32_t len = r.u32();
            versions.emplace(index, r.raw(len));
        }
        view.emplace(std::move(key), std::move(versions));
    }
    if (!r.done()) raise(Errc::malformed_stream, "trailing bytes in store state");
    for (size_t i = 0; i < set.replicas_.size(); ++i) {
        if (set.is_live(i)) set.replicas_[i] = view;
    }
    return set;
}

} // namespace chainport
