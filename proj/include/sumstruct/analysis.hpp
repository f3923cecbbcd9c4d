#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sumstruct/config.hpp"
#include "sumstruct/element_set.hpp"
#include "sumstruct/group.hpp"
#include "sumstruct/sequence.hpp"

namespace sumstruct {

bool is_complete(const GroupSpec& g, const MultisetSequence& items, const Limits& limits = {});
bool is_complete(const GroupSpec& g, const ElementSet& set, const Limits& limits = {});

/// Per-maximal-subgroup spanning detail for the niceness test.
struct NicenessVerdict {
    struct Detail {
        Subgroup subgroup;
        std::uint32_t intersection_size;
        std::uint32_t span_size; // |S_{A ∩ H}|
        bool spans;              // S_{A ∩ H} == H
    };
    bool nice = false;
    std::optional<Subgroup> witness; // spanning H of least index, then least members
    std::vector<Detail> per_subgroup;
};

/// A set is nice when some prime-index subgroup H satisfies S_{A∩H} = H.
NicenessVerdict is_nice(const GroupSpec& g, const ElementSet& a, const Limits& limits = {});

/// Bound checks for incomplete sets. For every maximal H spanned by A∩H:
/// |A \ H| <= index(H) - 2, and the projection of A \ H to the quotient is
/// an incomplete sequence there. When A is nice, additionally
/// |A| <= n/p + p - 2 for the smallest prime divisor p. Both |A \ H| and
/// |H \ A| are reported so either reading of the bound is visible.
struct FactBoundsReport {
    struct Row {
        std::uint32_t subgroup_index_q;
        ElementSet subgroup_members;
        std::uint32_t a_minus_h;
        std::uint32_t h_minus_a;
        bool size_bound_ok;             // |A \ H| <= q - 2
        std::vector<std::uint32_t> projected_labels; // labels of A \ H, with repeats
        bool projection_incomplete;     // projected sequence incomplete in Z_q
    };
    std::vector<Row> rows;
    bool nice = false;
    bool global_bound_checked = false; // only when nice
    bool global_bound_ok = false;      // |A| <= n/p + p - 2
    bool all_ok = true;
};

FactBoundsReport fact_bounds_check(const GroupSpec& g, const ElementSet& a,
                                   const Limits& limits = {});

/// Critical-number value from the published case analysis on n = p*h
/// (p the smallest prime divisor). Prime orders only get the
/// floor(sqrt(4n-7)) upper bound.
struct TheoryCritical {
    enum class Kind { exact, interval, upper_bound_only };
    Kind kind;
    std::uint32_t lo = 0; // exact value, interval low, or 0 for bound-only
    std::uint32_t hi = 0; // exact value, interval high, or the upper bound
    std::string case_name;

    bool consistent_with(std::uint32_t c) const {
        switch (kind) {
        case Kind::exact: return c == lo;
        case Kind::interval: return lo <= c && c <= hi;
        case Kind::upper_bound_only: return c <= hi;
        }
        return false;
    }
};

TheoryCritical theory_critical_number(const GroupSpec& g);

/// Maximum-size incomplete subset (of G, or of G \ {0}) by branch and
/// bound over the subset tree with closure pruning. Witness ties break to
/// the lexicographically first subset. Budget exhaustion returns the
/// best found so far, flagged.
struct MaxIncompleteResult {
    std::uint32_t size = 0;
    ElementSet witness;
    std::uint64_t nodes = 0;
    bool truncated = false;
};

MaxIncompleteResult max_incomplete_set(const GroupSpec& g, bool allow_zero,
                                       const Budget& budget = {});

/// Exact critical number: c(G) = 1 + max incomplete size over G \ {0}.
struct CriticalNumberResult {
    std::optional<std::uint32_t> exact; // absent when truncated
    std::uint32_t max_incomplete_lower_bound = 0;
    ElementSet witness_incomplete;
    TheoryCritical theory;
    bool theory_consistent = false;
    std::uint64_t nodes = 0;
    bool truncated = false;
};

CriticalNumberResult critical_number(const GroupSpec& g, const Budget& budget = {});

/// Maximum-size subset of G that is simultaneously incomplete and not
/// nice. Niceness is monotone under supersets, so nice nodes prune.
/// The comparison record holds the (empirical, small-n) thresholds that
/// large-group structure theory would put on nice sets.
struct MaxNonNiceResult {
    std::uint32_t size = 0;
    ElementSet witness;
    std::uint64_t nodes = 0;
    bool truncated = false;
    double delta = 0;
    double threshold_single_prime = 0; // (5/6 + delta) n / p1
    double threshold_two_primes = 0;   // (1 + delta) n / (p1 p2)
    bool empirical = true;             // desk-scale data, not a theorem check
};

MaxNonNiceResult max_non_nice_incomplete_set(const GroupSpec& g, const Budget& budget = {},
                                             double delta = 1.0 / 6.0);

} // namespace sumstruct
