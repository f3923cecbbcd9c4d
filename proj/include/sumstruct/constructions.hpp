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

/// A parametric extremal object together with its claim list; every claim
/// is verified at build time and a result with any failed claim never
/// serializes as valid.
struct ConstructionResult {
    std::string name;
    std::string params;
    std::vector<std::uint32_t> group_factors;
    std::optional<ElementSet> set;
    std::optional<MultisetSequence> sequence;

    struct Claim {
        std::string property;
        bool expected;
        bool actual;
        bool pass() const { return expected == actual; }
    };
    std::vector<Claim> claims;

    bool valid() const {
        for (const auto& c : claims)
            if (!c.pass()) return false;
        return true;
    }
};

/// G = Z_{p^2}, A = {0, 1, ..., p}: larger than sqrt(n), yet S_A holds no
/// subgroup beyond {0}. Requires p >= 5 (the containment claim is false
/// for p in {2, 3}).
ConstructionResult staircase_example(std::uint32_t p, const Limits& limits = {});

/// G = Z_{p^2} + Z_q with p < q, m maximal with m(m+1)/2 < p^2 - 1,
/// A = {(x,0) : x <= m} ∪ {(0,y) : y <= q-1}: an incomplete, not nice set
/// of size m + q.
ConstructionResult dir2_sharp_example(std::uint32_t p, std::uint32_t q,
                                      const Limits& limits = {});

/// The all-ones sequence of length p-2 in Z_p: together with 0 it misses
/// a residue, witnessing sharpness of the spanning length p-1.
ConstructionResult fact1_extremal_sequence(std::uint32_t p);

/// A maximal-subgroup coset construction of an incomplete set of size
/// n/p + p - 3: all of H \ {0} plus p-2 elements of one nontrivial coset.
ConstructionResult coset_extremal_set(const GroupSpec& g, const Limits& limits = {});

} // namespace sumstruct
