#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "sumstruct/group.hpp"

namespace sumstruct {

using OrderedJson = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolName = "sumstruct";
inline constexpr const char* kToolVersion = "0.1.0";

/// Round a real to 12 significant digits (the rendering precision of every
/// real-valued report field).
double round12(double x);

/// One emitted record: command echo, group, typed verdict payload, flags.
/// Re-running the echoed command must reproduce the verdict bytes;
/// timings therefore live outside the verdict.
struct AnalysisReport {
    OrderedJson command; // argv echo + seed + budgets
    OrderedJson group;   // factors, canonical_key, order (may be null)
    std::string kind;    // verdict payload type, e.g. "critical"
    OrderedJson verdict;
    bool truncated = false;
    bool cache_hit = false; // provenance, not part of the verdict payload
    double timing_ms = 0;

    OrderedJson to_json() const;
    std::string verdict_bytes() const { return verdict.dump(); }
};

OrderedJson group_json(const GroupSpec& g);

enum class ReportFormat { jsonl, csv, table };
ReportFormat parse_format(const std::string& name);

/// jsonl: one object per line. csv: a projection with a fixed header per
/// verdict kind (scalars only; nested values render as compact JSON).
/// table: human-readable.
std::string serialize_reports(const std::vector<AnalysisReport>& reports, ReportFormat fmt);

} // namespace sumstruct
