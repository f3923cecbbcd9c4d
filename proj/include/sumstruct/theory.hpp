#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sumstruct/config.hpp"
#include "sumstruct/element_set.hpp"
#include "sumstruct/group.hpp"

namespace sumstruct {

/// The pair of constants controlling when a set is "large enough":
///   C(eps) = sqrt((40/eps^2) / log(2/eps))          (natural log)
///   n_eps  = least m with  n >= C sqrt(n log n) > 4/eps^2  for all n >= m.
struct ConstantsRecord {
    double epsilon;
    double C;
    std::uint64_t n_eps;
    bool sanity_500; // n_eps <= 500 / eps^4
};

ConstantsRecord compute_constants(double epsilon);

/// Exhaustive (or explicitly sampled) verification outcome for one
/// property. The violations list is complete within the scanned range
/// whenever `sampled` is false.
struct VerifierReport {
    std::string property_id;
    std::string params;
    std::uint64_t instances_checked = 0;
    std::vector<std::string> violations; // rendered witnesses
    bool sampled = false;
    double runtime_ms = 0;

    bool ok() const { return violations.empty(); }
};

/// Every length-(p-1) sequence of nonzero residues mod p spans all of Z_p
/// (together with 0), and the all-ones length-(p-2) sequence does not.
VerifierReport verify_fact1(std::uint32_t p);

/// Every subset of size floor(n/2)+2 is complete. Exhaustive for
/// n <= 18; larger orders are sampled (flagged).
VerifierReport verify_half_plus_two(const GroupSpec& g, std::uint64_t seed = 0,
                                    std::uint64_t samples = 20000);

/// Every subset with at least ceil(3 sqrt n) elements has a nonempty
/// zero-sum subset. Exhaustive for n <= 20; larger orders sampled.
VerifierReport verify_zero_sum(const GroupSpec& g, std::uint64_t seed = 0,
                               std::uint64_t samples = 20000);

/// Sumset growth for 0 in A, 1 <= l <= max_l, in three forms:
///   (a) literal:   lA = <A>  or  |lA| >= |A| + (l-1)(|A|/2 + 1)
///   (b) weakened:  lA = <A>  or  |lA| >= ceil((l+1)|A|/2)
///   (c) corollary: (l+1)|A| >= 2n  implies  lA = <A>
/// (b) and (c) are hard assertions (their violations fill `violations`);
/// (a) fails on small instances and its breaches are reported separately
/// as findings, not failures.
struct OlsonReport {
    VerifierReport hard; // (b) + (c)
    std::vector<std::string> literal_findings;
    std::uint64_t literal_violation_count = 0;
};

OlsonReport verify_olson_growth(const GroupSpec& g, std::uint32_t max_l);

/// Distribution of r(A) = |largest subgroup inside S_A| / |A| over subsets
/// with |A| >= size_threshold. Purely empirical at desk scale: the
/// large-group hypotheses behind the subgroup theorem are out of reach, so
/// nothing is asserted; the profile is data.
struct SubgroupProfile {
    std::uint32_t size_threshold;
    bool exhaustive;
    std::uint64_t instances = 0;
    double r_min = 0, r_q1 = 0, r_median = 0, r_q3 = 0, r_max = 0;
    struct Worst {
        double ratio;
        std::vector<std::uint32_t> set;
    };
    std::vector<Worst> worst; // up to 5, lowest ratios
    double runtime_ms = 0;
};

SubgroupProfile profile_subgroup_theorem(const GroupSpec& g, std::uint32_t size_threshold,
                                         bool exhaustive, std::uint64_t seed = 0,
                                         std::uint64_t samples_per_size = 200,
                                         const Limits& limits = {});

/// Randomized extraction of a spread subset: S' of prescribed size such
/// that no maximal subgroup holds more than a (1 - delta/10) fraction of
/// it. Bernoulli draws come from the named deterministic stream
/// (seed, attempt, position); each accepted candidate is re-verified
/// before being returned, never trusted from the construction.
struct SpreadResult {
    std::optional<ElementSet> spread; // absent: attempts exhausted
    std::uint32_t attempts_used = 0;  // attempts consumed (index of success + 1)
    double rho = 0;
    std::uint32_t target_size = 0;
    // nearest-miss stats when exhausted
    std::uint32_t size_window_hits = 0;  // |S1| landed in window
    std::uint32_t cap_failures = 0;      // rejected by a subgroup cap
    std::uint32_t verify_failures = 0;   // final fraction check failed
};

SpreadResult sample_spread_subset(const GroupSpec& g, const ElementSet& s, double delta,
                                  std::uint64_t seed, std::uint32_t max_attempts = 1000);

} // namespace sumstruct
