#include "sumstruct/constructions.hpp"

#include <algorithm>
#include <cmath>

#include "sumstruct/analysis.hpp"
#include "sumstruct/errors.hpp"
#include "sumstruct/sumset.hpp"

namespace sumstruct {

namespace {

bool is_prime_u32(std::uint32_t k) {
    if (k < 2) return false;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= k; ++d)
        if (k % d == 0) return false;
    return true;
}

} // namespace

ConstructionResult staircase_example(std::uint32_t p, const Limits& limits) {
    if (!is_prime_u32(p)) throw Error(Errc::not_prime, std::to_string(p) + " is not prime");
    if (p < 5)
        throw Error(Errc::p_too_small,
                    "the no-proper-subgroup claim fails for p < 5 (p(p+1)/2 reaches p(p-1))");
    const std::uint64_t n64 = std::uint64_t{p} * p;
    if (n64 > limits.order_cap) throw Error(Errc::order_cap_exceeded, "p^2 exceeds order cap");

    GroupSpec g = GroupSpec::make({p * p}, limits);
    ElementSet a(g.order());
    for (std::uint32_t x = 0; x <= p; ++x) a.set(x);

    ConstructionResult res;
    res.name = "staircase";
    res.params = "p=" + std::to_string(p);
    res.group_factors = g.factors();
    res.set = a;

    res.claims.push_back(
        {"|A| > sqrt(n)", true,
         static_cast<double>(a.count()) > std::sqrt(static_cast<double>(g.order()))});

    ElementSet s = subset_sums(g, a, limits);
    // the sums of {0..p} are exactly 0..p(p+1)/2, which stays below p^2
    ElementSet expect(g.order());
    for (std::uint32_t v = 0; v <= p * (p + 1) / 2; ++v) expect.set(v);
    res.claims.push_back({"S_A = {0..p(p+1)/2}", true, s == expect});

    Limits local = limits;
    local.lattice_cap = std::max(local.lattice_cap, p * p);
    auto big = largest_subgroup_in(g, s, local);
    res.claims.push_back(
        {"largest subgroup in S_A is trivial", true,
         big.subgroup.has_value() && big.subgroup->order == 1});
    return res;
}

ConstructionResult dir2_sharp_example(std::uint32_t p, std::uint32_t q, const Limits& limits) {
    if (!is_prime_u32(p) || !is_prime_u32(q))
        throw Error(Errc::not_prime, "p and q must be prime");
    if (p >= q) throw Error(Errc::primes_out_of_order, "requires p < q");
    const std::uint64_t n64 = std::uint64_t{p} * p * q;
    if (n64 > limits.order_cap) throw Error(Errc::order_cap_exceeded, "p^2 q exceeds order cap");

    GroupSpec g = GroupSpec::make({p * p, q}, limits);
    // m = largest integer with m(m+1)/2 < p^2 - 1
    std::uint32_t m = 0;
    while ((m + 1) * (m + 2) / 2 < p * p - 1) ++m;

    ElementSet a(g.order());
    for (std::uint32_t x = 0; x <= m; ++x) a.set(g.encode({x, 0}));
    for (std::uint32_t y = 0; y < q; ++y) a.set(g.encode({0, y}));

    ConstructionResult res;
    res.name = "dir2-sharp";
    res.params = "p=" + std::to_string(p) + " q=" + std::to_string(q);
    res.group_factors = g.factors();
    res.set = a;

    res.claims.push_back({"m maximal: m(m+1)/2 < p^2-1 <= (m+1)(m+2)/2", true,
                          m * (m + 1) / 2 < p * p - 1 && p * p - 1 <= (m + 1) * (m + 2) / 2});
    res.claims.push_back({"|A| = m + q", true, a.count() == m + q});
    res.claims.push_back({"|A| - n/p^2 = m", true, a.count() - g.order() / (p * p) == m});
    res.claims.push_back({"A incomplete", true, !is_complete(g, a, limits)});
    res.claims.push_back({"A nice", false, is_nice(g, a, limits).nice});
    return res;
}

ConstructionResult fact1_extremal_sequence(std::uint32_t p) {
    if (!is_prime_u32(p)) throw Error(Errc::not_prime, std::to_string(p) + " is not prime");
    GroupSpec g = GroupSpec::make({p});
    std::vector<std::uint32_t> items(p - 2, 1); // empty for p = 2
    MultisetSequence seq = MultisetSequence::from_items(items);

    ConstructionResult res;
    res.name = "fact1-extremal";
    res.params = "p=" + std::to_string(p);
    res.group_factors = g.factors();
    res.sequence = seq;

    ElementSet s = subset_sums(g, seq);
    s.set(0);
    ElementSet expect(p);
    for (std::uint32_t v = 0; p >= 2 && v + 1 < p; ++v) expect.set(v); // {0..p-2}
    res.claims.push_back({"S ∪ {0} = {0..p-2}", true, s == expect});
    res.claims.push_back({"S ∪ {0} = Z_p", false, s.is_full()});
    return res;
}

ConstructionResult coset_extremal_set(const GroupSpec& g, const Limits& limits) {
    if (g.prime_factors().size() < 2)
        throw Error(Errc::not_composite, "needs a composite order");
    const std::uint32_t p = g.smallest_prime();

    // first maximal subgroup of index p in the canonical order
    auto maxsubs = maximal_subgroups(g);
    const Subgroup* h = nullptr;
    for (const auto& sub : maxsubs)
        if (sub.index == p) {
            h = &sub;
            break;
        }
    if (!h) throw Error(Errc::not_composite, "no maximal subgroup of index p"); // unreachable

    ElementSet a = h->members;
    a.reset(0);
    // smallest element outside H opens the coset; take the p-2 smallest
    // coset members from there
    ElementSet outside = ElementSet::full(g.order());
    outside.subtract(h->members);
    const auto x = static_cast<std::uint32_t>(outside.next_member(0));
    auto labels = coset_labels(g, *h);
    std::uint32_t taken = 0;
    for (std::uint32_t y = x; y < g.order() && taken < p - 2; ++y) {
        if (labels[y] == labels[x]) {
            a.set(y);
            ++taken;
        }
    }

    ConstructionResult res;
    res.name = "coset-extremal";
    res.params = "group=" + g.canonical_key_string();
    res.group_factors = g.factors();
    res.set = a;

    res.claims.push_back({"|A| = n/p + p - 3", true, a.count() == g.order() / p + p - 3});
    res.claims.push_back({"A incomplete", true, !is_complete(g, a, limits)});
    return res;
}

} // namespace sumstruct
