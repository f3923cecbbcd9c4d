#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "sumstruct/errors.hpp"
#include "sumstruct/scan.hpp"
#include "sumstruct/sumset.hpp"
#include "sumstruct/theory.hpp"

using namespace sumstruct;

TEST_CASE("constants: frozen high-precision references") {
    // reference values computed with 30-digit arithmetic
    ConstantsRecord c1 = compute_constants(1.0);
    CHECK(std::abs(c1.C - 7.5965651208660442) <= 1e-12 * c1.C);
    CHECK(c1.n_eps == 336);
    CHECK(c1.sanity_500);

    ConstantsRecord c2 = compute_constants(0.5);
    CHECK(std::abs(c2.C - 10.74316542137917) <= 1e-12 * c2.C);
    CHECK(c2.n_eps == 767);
    CHECK(c2.sanity_500); // 767 <= 8000

    ConstantsRecord c4 = compute_constants(0.25);
    CHECK(std::abs(c4.C - 17.54351566979413) <= 1e-12 * c4.C);
    CHECK(c4.n_eps == 2395);
    CHECK(c4.sanity_500); // 2395 <= 128000

    CHECK_THROWS_AS(compute_constants(0.0), Error);
    CHECK_THROWS_AS(compute_constants(1.5), Error);
}

TEST_CASE("constants: boundary and monotonicity") {
    double prev_c = 0;
    std::uint64_t prev_n = 0;
    for (double eps : {1.0, 0.5, 0.25, 0.125}) {
        ConstantsRecord r = compute_constants(eps);
        const double c2 = r.C * r.C;
        auto cond = [&](std::uint64_t n) {
            const double dn = static_cast<double>(n);
            return dn >= c2 * std::log(dn) &&
                   r.C * std::sqrt(dn * std::log(dn)) > 4.0 / (eps * eps);
        };
        CHECK(cond(r.n_eps));
        CHECK(!cond(r.n_eps - 1));
        for (std::uint64_t k = 1; k <= 64; ++k) CHECK(cond(r.n_eps + k * k));
        // smaller epsilon never shrinks the constants
        CHECK(r.C >= prev_c);
        CHECK(r.n_eps >= prev_n);
        prev_c = r.C;
        prev_n = r.n_eps;
    }
}

TEST_CASE("nonzero sequences of length p-1 span Z_p") {
    auto counts = std::vector<std::pair<std::uint32_t, std::uint64_t>>{
        {2, 1}, {3, 3}, {5, 35}, {7, 462}, {11, 92378}};
    for (auto [p, expected_instances] : counts) {
        VerifierReport rep = verify_fact1(p);
        CHECK(rep.instances_checked == expected_instances);
        CHECK(rep.ok());
        CHECK(!rep.sampled);
    }
    CHECK_THROWS_AS(verify_fact1(9), Error);
    CHECK_THROWS_AS(verify_fact1(17), Error);

    // spot-check the designated extremal direction by hand for p = 5
    GroupSpec z5 = GroupSpec::make({5});
    ElementSet s = oracle::naive_subset_sums(z5, {1, 1, 1});
    s.set(0);
    CHECK(s.members() == std::vector<std::uint32_t>{0, 1, 2, 3});
}

TEST_CASE("half-occupancy completeness: known instance counts") {
    VerifierReport z6 = verify_half_plus_two(GroupSpec::make({6}));
    CHECK(z6.instances_checked == 6); // C(6,5)
    CHECK(z6.ok());

    VerifierReport z4 = verify_half_plus_two(GroupSpec::make({4}));
    CHECK(z4.instances_checked == 1); // C(4,4)
    CHECK(z4.ok());

    VerifierReport z2 = verify_half_plus_two(GroupSpec::make({2}));
    CHECK(z2.instances_checked == 0); // vacuous
    CHECK(z2.ok());

    for (std::uint32_t n = 2; n <= 14; ++n)
        for (const auto& f : abelian_groups_in_range(n, n))
            CHECK(verify_half_plus_two(GroupSpec::make(f)).ok());

    VerifierReport sampled = verify_half_plus_two(GroupSpec::make({24}), 7, 500);
    CHECK(sampled.sampled);
    CHECK(sampled.ok());
    CHECK(sampled.instances_checked == 500);
}

TEST_CASE("zero-sum threshold: known instance counts") {
    VerifierReport z16 = verify_zero_sum(GroupSpec::make({16}));
    CHECK(z16.instances_checked == 2517); // sum C(16, 12..16)
    CHECK(z16.ok());

    VerifierReport z4 = verify_zero_sum(GroupSpec::make({4}));
    CHECK(z4.instances_checked == 0); // ceil(3*2) = 6 > 4, vacuous
    CHECK(z4.ok());

    for (std::uint32_t n = 2; n <= 16; ++n)
        for (const auto& f : abelian_groups_in_range(n, n))
            CHECK(verify_zero_sum(GroupSpec::make(f)).ok());
}

TEST_CASE("sumset growth: hard assertions hold, literal form has pinned findings") {
    // weakened + corollary: zero violations over all groups n <= 12, l <= 4
    for (std::uint32_t n = 2; n <= 12; ++n) {
        for (const auto& f : abelian_groups_in_range(n, n)) {
            OlsonReport rep = verify_olson_growth(GroupSpec::make(f), 4);
            CHECK(rep.hard.ok());
        }
    }

    // the pinned literal-form counterexample: Z_7, A = {0,1,2}, l = 2
    OlsonReport z7 = verify_olson_growth(GroupSpec::make({7}), 2);
    CHECK(!z7.literal_findings.empty());
    bool pinned = false;
    for (const auto& f : z7.literal_findings)
        if (f.find("A={0,1,2} l=2") != std::string::npos) pinned = true;
    CHECK(pinned);

    // frozen finding counts (cross-checked against an independent scan)
    OlsonReport z7full = verify_olson_growth(GroupSpec::make({7}), 4);
    CHECK(z7full.literal_violation_count == 27);
    CHECK(verify_olson_growth(GroupSpec::make({4}), 4).literal_violation_count == 2);
    CHECK(verify_olson_growth(GroupSpec::make({2, 2}), 4).literal_violation_count == 0);
    CHECK(verify_olson_growth(GroupSpec::make({3, 3}), 4).literal_violation_count == 0);
    CHECK(verify_olson_growth(GroupSpec::make({2, 2, 2}), 4).literal_violation_count == 0);

    // the instance behind the pinned finding, by hand: 2A = {0..4},
    // |2A| = 5 < 3 + 1*(3/2 + 1) = 5.5 and 2A != <A> = Z_7
    GroupSpec g7 = GroupSpec::make({7});
    ElementSet a(7);
    a.set(0);
    a.set(1);
    a.set(2);
    CHECK(iterated_sumset(g7, a, 2).members() == std::vector<std::uint32_t>{0, 1, 2, 3, 4});

    CHECK_THROWS_AS(verify_olson_growth(GroupSpec::make({17}), 4), Error);
    CHECK_THROWS_AS(verify_olson_growth(GroupSpec::make({8}), 7), Error);
}

TEST_CASE("subgroup content profile") {
    // single instance from the staircase family: A = {0..5} in Z_25
    GroupSpec z25 = GroupSpec::make({25});
    ElementSet a(25);
    for (std::uint32_t x = 0; x <= 5; ++x) a.set(x);
    auto big = largest_subgroup_in(z25, subset_sums(z25, a));
    REQUIRE(big.subgroup.has_value());
    CHECK(big.subgroup->order == 1); // ratio 1/6

    // any subgroup profiles at ratio 1
    for (auto factors : {std::vector<std::uint32_t>{12}, {2, 6}, {16}, {3, 3}}) {
        GroupSpec g = GroupSpec::make(factors);
        for (const auto& h : *all_subgroups(g)) {
            ElementSet s = subset_sums(g, h.members);
            if (h.order == 1) {
                CHECK(s.members() == std::vector<std::uint32_t>{0});
                continue;
            }
            auto r = largest_subgroup_in(g, s);
            REQUIRE(r.subgroup.has_value());
            CHECK(r.subgroup->order == h.order);
        }
    }

    SubgroupProfile prof = profile_subgroup_theorem(GroupSpec::make({16}), 12, true);
    CHECK(prof.instances == 2517);
    CHECK(prof.r_min > 0);
    CHECK(prof.r_max <= 16.0 / 12.0 + 1e-12);
    REQUIRE(prof.worst.size() == 5);
    CHECK(prof.worst[0].ratio == prof.r_min);

    // sampled mode is deterministic in the seed
    SubgroupProfile s1 = profile_subgroup_theorem(GroupSpec::make({20}), 16, false, 42, 50);
    SubgroupProfile s2 = profile_subgroup_theorem(GroupSpec::make({20}), 16, false, 42, 50);
    CHECK(s1.instances == s2.instances);
    CHECK(s1.r_min == s2.r_min);
    CHECK(s1.r_median == s2.r_median);

    CHECK_THROWS_AS(profile_subgroup_theorem(GroupSpec::make({17}), 12, true), Error);
}

TEST_CASE("spread subset sampling") {
    GroupSpec g = GroupSpec::make({9, 5});
    ElementSet full = ElementSet::full(45);

    // seeds 0..19 all succeed quickly on the full group at delta = 1/4
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        SpreadResult r = sample_spread_subset(g, full, 0.25, seed);
        REQUIRE(r.spread.has_value());
        CHECK(r.target_size == 3);
        CHECK(r.spread->count() == 3);
        for (const auto& h : maximal_subgroups(g)) {
            ElementSet inter = *r.spread;
            inter &= h.members;
            CHECK(static_cast<double>(inter.count()) / 3.0 <= 1.0 - 0.25 / 10.0);
        }
    }

    // bit-for-bit determinism
    SpreadResult a = sample_spread_subset(g, full, 0.25, 0);
    SpreadResult b = sample_spread_subset(g, full, 0.25, 0);
    REQUIRE(a.spread.has_value());
    REQUIRE(b.spread.has_value());
    CHECK(a.spread->members() == b.spread->members());
    CHECK(a.attempts_used == b.attempts_used);

    // concentrated set violates the hypothesis
    ElementSet inside(45);
    for (auto m : maximal_subgroups(g)[0].members.members()) inside.set(m);
    CHECK_THROWS_AS(sample_spread_subset(g, inside, 0.25, 0), Error);

    CHECK_THROWS_AS(sample_spread_subset(g, full, 0.0, 0), Error);
    CHECK_THROWS_AS(sample_spread_subset(g, full, 0.6, 0), Error);
    CHECK_THROWS_AS(sample_spread_subset(g, ElementSet(45), 0.25, 0), Error);
}
