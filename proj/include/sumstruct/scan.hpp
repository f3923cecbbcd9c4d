#pragma once

#include <cstdint>
#include <vector>

#include "sumstruct/group.hpp"

namespace sumstruct {

/// All abelian groups of the given order, one factor list per isomorphism
/// class (prime-power partitions, sorted factors). Deterministic order.
std::vector<std::vector<std::uint32_t>> abelian_groups_of_order(std::uint32_t n);

/// All abelian groups with order in [lo, hi], ordered by (order, key).
std::vector<std::vector<std::uint32_t>> abelian_groups_in_range(std::uint32_t lo,
                                                                std::uint32_t hi);

} // namespace sumstruct
