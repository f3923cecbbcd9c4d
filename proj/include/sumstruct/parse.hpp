#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sumstruct/element_set.hpp"
#include "sumstruct/group.hpp"
#include "sumstruct/sequence.hpp"

namespace sumstruct {

// Shared CLI text formats.
//   group:    comma-separated factor orders           "9,5"
//   element:  bare index or coordinate tuple          "7"  |  "(3,1)"
//   set:      brace-enclosed element list             "{1,2,3}" | "{(0,0),(1,0)}"
//   sequence: seq-prefixed brace list with repeats    "seq{1,1,3}"

std::vector<std::uint32_t> parse_group_factors(const std::string& text);

std::uint32_t parse_element(const GroupSpec& g, const std::string& text);

/// Rejects duplicate elements; repeated elements need sequence syntax.
ElementSet parse_set(const GroupSpec& g, const std::string& text);

MultisetSequence parse_sequence(const GroupSpec& g, const std::string& text);

std::string format_element(const GroupSpec& g, std::uint32_t index, bool coords);
std::string format_set(const GroupSpec& g, const ElementSet& s, bool coords = false);

} // namespace sumstruct
