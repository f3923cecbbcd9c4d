#pragma once

#include <cstdint>
#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

#include "sumstruct/report.hpp"

namespace sumstruct {

/// FNV-1a 64 of the canonical parameter string; cache hits require an
/// exact digest match.
std::string parameter_digest(const std::string& canonical_params);

/// Append-only store of finished reports keyed by
/// (canonical_key, command id, parameter digest), one JSON object per
/// line. Corrupt trailing lines are detected and dropped on load.
/// Appends are serialized through one writer; lookups are lock-free after
/// load.
class ScanCache {
public:
    explicit ScanCache(const std::filesystem::path& dir);

    std::optional<OrderedJson> lookup(const std::string& canonical_key,
                                      const std::string& command,
                                      const std::string& digest) const;

    void append(const std::string& canonical_key, const std::string& command,
                const std::string& digest, const OrderedJson& report);

    std::size_t size() const { return records_.size(); }
    std::size_t dropped_on_load() const { return dropped_; }
    const std::filesystem::path& file() const { return file_; }

private:
    static std::string key_of(const std::string& ck, const std::string& cmd,
                              const std::string& digest);

    std::filesystem::path file_;
    std::unordered_map<std::string, OrderedJson> records_;
    std::size_t dropped_ = 0;
    std::mutex write_mutex_;
};

} // namespace sumstruct
