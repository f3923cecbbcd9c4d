#pragma once

#include <cstdint>

namespace sumstruct {

/// Desk-scale guardrails. All caps are configuration with defaults, not
/// hard constants; callers may raise them knowingly.
struct Limits {
    std::uint64_t order_cap = std::uint64_t{1} << 20; // group order for bitset work
    std::uint32_t lattice_cap = 512;                  // full subgroup lattice
    std::uint32_t sequence_cap = std::uint32_t{1} << 16; // total multiset length
};

/// Search budget. Whichever trips first truncates the search; truncation is
/// always flagged in results. max_seconds == 0 means no wall-clock limit.
struct Budget {
    std::uint64_t max_nodes = 50'000'000;
    double max_seconds = 0.0;
};

} // namespace sumstruct
