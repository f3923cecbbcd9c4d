#include "sumstruct/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "sumstruct/errors.hpp"

namespace sumstruct {

double round12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

OrderedJson group_json(const GroupSpec& g) {
    OrderedJson j;
    j["factors"] = g.factors();
    j["canonical_key"] = g.canonical_key_string();
    j["order"] = g.order();
    return j;
}

OrderedJson AnalysisReport::to_json() const {
    OrderedJson j;
    j["schema_version"] = kSchemaVersion;
    j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
    j["command"] = command;
    j["group"] = group;
    j["kind"] = kind;
    j["verdict"] = verdict;
    j["truncated"] = truncated;
    j["cache_hit"] = cache_hit;
    j["timing_ms"] = round12(timing_ms);
    return j;
}

ReportFormat parse_format(const std::string& name) {
    if (name == "jsonl") return ReportFormat::jsonl;
    if (name == "csv") return ReportFormat::csv;
    if (name == "table") return ReportFormat::table;
    throw Error(Errc::usage, "unknown format '" + name + "' (jsonl|csv|table)");
}

namespace {

std::string csv_quote(const std::string& s) {
    bool need = s.find_first_of(",\"\n") != std::string::npos;
    if (!need) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string cell(const OrderedJson& v) {
    if (v.is_string()) return csv_quote(v.get<std::string>());
    return csv_quote(v.dump());
}

/// Header: fixed lead columns plus the verdict's top-level keys in their
/// (deterministic) insertion order.
std::string to_csv(const std::vector<AnalysisReport>& reports) {
    if (reports.empty()) return "";
    std::vector<std::string> cols;
    for (auto it = reports.front().verdict.begin(); it != reports.front().verdict.end(); ++it)
        cols.push_back(it.key());
    std::ostringstream os;
    os << "schema_version,kind,group,order,truncated";
    for (const auto& c : cols) os << ',' << csv_quote(c);
    os << '\n';
    for (const auto& r : reports) {
        os << kSchemaVersion << ',' << csv_quote(r.kind) << ',';
        os << (r.group.is_object() ? csv_quote(r.group["canonical_key"].get<std::string>())
                                   : std::string())
           << ',';
        os << (r.group.is_object() ? r.group["order"].dump() : std::string()) << ',';
        os << (r.truncated ? "true" : "false");
        for (const auto& c : cols) {
            os << ',';
            if (r.verdict.contains(c)) os << cell(r.verdict[c]);
        }
        os << '\n';
    }
    return os.str();
}

void table_value(std::ostringstream& os, const std::string& key, const OrderedJson& v,
                 int indent) {
    os << std::string(indent, ' ') << key << ": ";
    if (v.is_object()) {
        os << '\n';
        for (auto it = v.begin(); it != v.end(); ++it) table_value(os, it.key(), it.value(), indent + 2);
        return;
    }
    os << v.dump() << '\n';
}

std::string to_table(const std::vector<AnalysisReport>& reports) {
    std::ostringstream os;
    for (const auto& r : reports) {
        os << "== " << r.kind;
        if (r.group.is_object())
            os << "  group Z[" << r.group["canonical_key"].get<std::string>() << "] (order "
               << r.group["order"].dump() << ")";
        if (r.truncated) os << "  [TRUNCATED]";
        os << '\n';
        for (auto it = r.verdict.begin(); it != r.verdict.end(); ++it)
            table_value(os, it.key(), it.value(), 2);
    }
    return os.str();
}

} // namespace

std::string serialize_reports(const std::vector<AnalysisReport>& reports, ReportFormat fmt) {
    switch (fmt) {
    case ReportFormat::jsonl: {
        std::string out;
        for (const auto& r : reports) {
            out += r.to_json().dump();
            out += '\n';
        }
        return out;
    }
    case ReportFormat::csv:
        return to_csv(reports);
    case ReportFormat::table:
        return to_table(reports);
    }
    return "";
}

} // namespace sumstruct
