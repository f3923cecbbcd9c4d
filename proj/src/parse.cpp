#include "sumstruct/parse.hpp"

#include <algorithm>
#include <cctype>

#include "sumstruct/errors.hpp"

namespace sumstruct {

namespace {

std::string strip(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::uint32_t parse_u32(const std::string& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c));
        }))
        throw Error(Errc::usage, "expected a nonnegative integer, got '" + s + "'");
    unsigned long long v = std::stoull(s);
    if (v > 0xFFFFFFFFull) throw Error(Errc::usage, "integer out of range: " + s);
    return static_cast<std::uint32_t>(v);
}

/// Split on commas at paren depth zero.
std::vector<std::string> split_top_level(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(strip(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!strip(cur).empty() || !out.empty()) out.push_back(strip(cur));
    return out;
}

std::string expect_braces(const std::string& text, const char* what) {
    std::string t = strip(text);
    if (t.size() < 2 || t.front() != '{' || t.back() != '}')
        throw Error(Errc::usage, std::string(what) + " must be brace-enclosed, got '" + text + "'");
    return strip(t.substr(1, t.size() - 2));
}

} // namespace

std::vector<std::uint32_t> parse_group_factors(const std::string& text) {
    std::vector<std::uint32_t> factors;
    for (const auto& part : split_top_level(strip(text))) {
        if (part.empty()) throw Error(Errc::usage, "empty factor in group spec '" + text + "'");
        factors.push_back(parse_u32(part));
    }
    if (factors.empty()) throw Error(Errc::usage, "empty group spec");
    return factors;
}

std::uint32_t parse_element(const GroupSpec& g, const std::string& text) {
    std::string t = strip(text);
    if (t.empty()) throw Error(Errc::usage, "empty element literal");
    if (t.front() == '(') {
        if (t.back() != ')') throw Error(Errc::usage, "unbalanced tuple '" + text + "'");
        auto parts = split_top_level(t.substr(1, t.size() - 2));
        std::vector<std::uint32_t> coords;
        for (const auto& p : parts) coords.push_back(parse_u32(p));
        if (coords.size() != g.factors().size())
            throw Error(Errc::usage, "tuple arity " + std::to_string(coords.size()) +
                                         " does not match group arity " +
                                         std::to_string(g.factors().size()));
        for (std::size_t i = 0; i < coords.size(); ++i)
            if (coords[i] >= g.factors()[i])
                throw Error(Errc::usage, "coordinate out of range in '" + text + "'");
        return g.encode(coords);
    }
    std::uint32_t idx = parse_u32(t);
    g.check_index(idx);
    return idx;
}

ElementSet parse_set(const GroupSpec& g, const std::string& text) {
    std::string inner = expect_braces(text, "set literal");
    ElementSet s(g.order());
    if (inner.empty()) return s;
    for (const auto& part : split_top_level(inner)) {
        std::uint32_t e = parse_element(g, part);
        if (s.test(e))
            throw Error(Errc::usage,
                        "duplicate element '" + part + "' in a set literal; use seq{...}");
        s.set(e);
    }
    return s;
}

MultisetSequence parse_sequence(const GroupSpec& g, const std::string& text) {
    std::string t = strip(text);
    if (t.rfind("seq", 0) != 0)
        throw Error(Errc::usage, "sequence literal must start with 'seq', got '" + text + "'");
    std::string inner = expect_braces(t.substr(3), "sequence literal");
    std::vector<std::uint32_t> items;
    if (!inner.empty())
        for (const auto& part : split_top_level(inner)) items.push_back(parse_element(g, part));
    return MultisetSequence::from_items(items);
}

std::string format_element(const GroupSpec& g, std::uint32_t index, bool coords) {
    if (!coords) return std::to_string(index);
    auto c = g.decode(index);
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(c[i]);
    }
    return s + ")";
}

std::string format_set(const GroupSpec& g, const ElementSet& s, bool coords) {
    std::string out = "{";
    bool first = true;
    for (auto x : s.members()) {
        if (!first) out += ',';
        first = false;
        out += format_element(g, x, coords);
    }
    return out + "}";
}

} // namespace sumstruct
