#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "sumstruct/config.hpp"
#include "sumstruct/element_set.hpp"

namespace sumstruct {

/// A finite abelian group given as a product of cyclic factors
/// Z_{d_0} x ... x Z_{d_{t-1}}, each d_i >= 2. Elements are encoded as
/// mixed-radix indices in [0, n) with factor 0 least significant:
///   index = sum_i x_i * prod_{j<i} d_j.
///
/// Any factor list is accepted (9,5 and 5,9 are different encodings of
/// isomorphic groups); isomorphism is visible through canonical_key(),
/// the sorted multiset of prime-power cyclic factors.
class GroupSpec {
public:
    static GroupSpec make(std::vector<std::uint32_t> factor_orders, const Limits& limits = {});

    std::uint32_t order() const { return n_; }
    const std::vector<std::uint32_t>& factors() const { return factors_; }

    /// Prime factorization of the order, ascending, with multiplicity.
    const std::vector<std::uint32_t>& prime_factors() const { return primes_; }

    /// Primary decomposition (sorted prime powers); equal for isomorphic specs.
    const std::vector<std::uint32_t>& canonical_key() const { return canonical_; }
    std::string canonical_key_string() const;

    std::uint32_t smallest_prime() const { return primes_.front(); }

    std::uint32_t encode(const std::vector<std::uint32_t>& coords) const;
    std::vector<std::uint32_t> decode(std::uint32_t index) const;

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t negate(std::uint32_t a) const;

    /// Least k >= 1 with k*a = 0; computed per coordinate, divides order().
    std::uint32_t element_order(std::uint32_t a) const;

    void check_index(std::uint32_t a) const; // throws index_out_of_range

private:
    GroupSpec() = default;

    std::vector<std::uint32_t> factors_;
    std::vector<std::uint64_t> radix_; // prefix products
    std::vector<std::uint32_t> primes_;
    std::vector<std::uint32_t> canonical_;
    std::uint32_t n_ = 0;
};

/// A subgroup as a closed member set plus bookkeeping. `generators` is a
/// (small, deterministic) generating list, not necessarily minimal.
struct Subgroup {
    ElementSet members;
    std::vector<std::uint32_t> generators;
    std::uint32_t order = 0;
    std::uint32_t index = 0; // n / order
};

/// Smallest subgroup containing `seeds` (breadth-first closure).
/// Empty seed list yields the trivial subgroup {0}.
Subgroup generated_subgroup(const GroupSpec& g, const std::vector<std::uint32_t>& seeds);

/// Exactly the subgroups of prime index, enumerated as kernels of
/// surjections onto Z_p (one per nonzero vector of Z_p^r up to scalar,
/// where r is the p-rank). Sorted by (index, members).
std::vector<Subgroup> maximal_subgroups(const GroupSpec& g);

/// The complete subgroup lattice via join-closure of all cyclic
/// subgroups, sorted by (order, members). Memoized per factor list;
/// requires order() <= limits.lattice_cap.
std::shared_ptr<const std::vector<Subgroup>> all_subgroups(const GroupSpec& g,
                                                           const Limits& limits = {});

/// True when `members` contains 0 and is closed under addition.
bool is_subgroup_members(const GroupSpec& g, const ElementSet& members);

/// Coset labels for the quotient by `h`: label of a coset is its rank when
/// cosets are ordered by minimum element index, so label(h) == 0. Returns
/// for each element index its coset label in [0, index).
std::vector<std::uint32_t> coset_labels(const GroupSpec& g, const Subgroup& h);

} // namespace sumstruct
