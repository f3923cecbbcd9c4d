#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "sumstruct/config.hpp"
#include "sumstruct/element_set.hpp"
#include "sumstruct/group.hpp"
#include "sumstruct/sequence.hpp"

namespace sumstruct {

/// dst |= (src + a). Word-level rotate for a single cyclic factor; index
/// permutation over set bits otherwise.
void or_shifted(const GroupSpec& g, ElementSet& dst, const ElementSet& src, std::uint32_t a);

/// One closure step: s <- s | (s + a) | {a}. Exactly one pass per copy of
/// a multiset element.
void closure_step(const GroupSpec& g, ElementSet& s, std::uint32_t a);

/// Sums of all nonempty sub-multisets (each element used at most its
/// multiplicity). The empty sum is excluded: 0 is in the result only when
/// some nonempty selection sums to 0.
ElementSet subset_sums(const GroupSpec& g, const MultisetSequence& items, const Limits& limits = {});
ElementSet subset_sums(const GroupSpec& g, const ElementSet& set, const Limits& limits = {});

/// The l-fold sumset {a_1 + ... + a_l : a_i in a}, repetition allowed.
ElementSet iterated_sumset(const GroupSpec& g, const ElementSet& a, std::uint32_t l);

/// Unordered-pair representation counts: counts[x] = #{ {u,v} : u != v,
/// u,v in a, u+v = x }. The table invariant sum = C(|a|, 2) is asserted
/// before return.
struct RepCountTable {
    std::vector<std::uint32_t> counts;
    std::uint32_t set_size = 0;
    std::uint64_t total() const;
};

RepCountTable representation_counts(const GroupSpec& g, const ElementSet& a);

/// For each target in order, pick the first representation pair (by
/// (smaller, larger) member order) avoiding all previously used elements.
/// Throws no_disjoint_representation (detail = failing target position)
/// when a target's list is exhausted.
std::vector<std::pair<std::uint32_t, std::uint32_t>> greedy_disjoint_pairs(
    const GroupSpec& g, const ElementSet& a, const std::vector<std::uint32_t>& targets);

/// Largest lattice subgroup whose members all lie in s, plus how many
/// subgroups of that maximum order fit. Empty result when 0 is not in s
/// (even the trivial subgroup needs it). Ties break to the
/// lexicographically least member set.
struct LargestSubgroupResult {
    std::optional<Subgroup> subgroup;
    std::uint32_t count_at_max = 0;
};

LargestSubgroupResult largest_subgroup_in(const GroupSpec& g, const ElementSet& s,
                                          const Limits& limits = {});

/// Strata of targets by representation count. Level j in [1, j0] holds
/// targets with K^{-j} M < m_x <= K^{-j+1} M where K = 2/eps, M = |a|/2 and
/// j0 is the largest j with K^{-j0} M >= 1; the tail level j0+1 holds
/// 1 <= m_x <= K^{-j0} M. Every level records the same (lower, upper]
/// bracket shape; only the tail admits members below its lower bound.
struct LevelDecomposition {
    struct Level {
        std::uint32_t j;
        double lower; // K^{-j} M
        double upper; // K^{-j+1} M
        ElementSet members;
        bool is_tail;
        bool large; // size > (1 - eps) |a|
    };
    double K = 0;
    double M = 0;
    std::uint32_t j0 = 0;
    double large_threshold = 0; // (1 - eps) |a|
    std::vector<Level> levels;
};

LevelDecomposition level_decomposition(const GroupSpec& g, const ElementSet& a, double epsilon);

} // namespace sumstruct
