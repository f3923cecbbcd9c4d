#include "sumstruct/cache.hpp"

#include <fstream>

namespace sumstruct {

std::string parameter_digest(const std::string& canonical_params) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : canonical_params) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string ScanCache::key_of(const std::string& ck, const std::string& cmd,
                              const std::string& digest) {
    return ck + '\x1f' + cmd + '\x1f' + digest;
}

ScanCache::ScanCache(const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    file_ = dir / "cache.jsonl";
    std::ifstream in(file_);
    std::string line;
    bool corrupt = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (corrupt) {
            ++dropped_;
            continue;
        }
        OrderedJson rec = OrderedJson::parse(line, nullptr, /*allow_exceptions=*/false);
        if (rec.is_discarded() || !rec.is_object() || !rec.contains("key") ||
            !rec.contains("report") || !rec["key"].is_object()) {
            corrupt = true; // drop this and everything after it
            ++dropped_;
            continue;
        }
        const auto& k = rec["key"];
        records_[key_of(k["group"].get<std::string>(), k["command"].get<std::string>(),
                        k["digest"].get<std::string>())] = rec["report"];
    }
    if (dropped_ > 0) {
        // rewrite without the corrupt tail so later appends stay parseable
        std::ofstream out(file_, std::ios::trunc);
        for (const auto& [key, report] : records_) {
            auto pos1 = key.find('\x1f');
            auto pos2 = key.find('\x1f', pos1 + 1);
            OrderedJson rec;
            rec["key"] = {{"group", key.substr(0, pos1)},
                          {"command", key.substr(pos1 + 1, pos2 - pos1 - 1)},
                          {"digest", key.substr(pos2 + 1)}};
            rec["report"] = report;
            out << rec.dump() << '\n';
        }
    }
}

std::optional<OrderedJson> ScanCache::lookup(const std::string& canonical_key,
                                             const std::string& command,
                                             const std::string& digest) const {
    auto it = records_.find(key_of(canonical_key, command, digest));
    if (it == records_.end()) return std::nullopt;
    return it->second;
}

void ScanCache::append(const std::string& canonical_key, const std::string& command,
                       const std::string& digest, const OrderedJson& report) {
    std::lock_guard<std::mutex> lock(write_mutex_);
    const std::string key = key_of(canonical_key, command, digest);
    if (records_.count(key)) return;
    records_[key] = report;
    OrderedJson rec;
    rec["key"] = {{"group", canonical_key}, {"command", command}, {"digest", digest}};
    rec["report"] = report;
    std::ofstream out(file_, std::ios::app);
    out << rec.dump() << '\n';
}

} // namespace sumstruct
