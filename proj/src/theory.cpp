#include "sumstruct/theory.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <cmath>
#include <numeric>

#include "sumstruct/errors.hpp"
#include "sumstruct/rng.hpp"
#include "sumstruct/sumset.hpp"

namespace sumstruct {

namespace {

bool is_prime_u32(std::uint32_t k) {
    if (k < 2) return false;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= k; ++d)
        if (k % d == 0) return false;
    return true;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

std::string render_set(const std::vector<std::uint32_t>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s + "}";
}

} // namespace

ConstantsRecord compute_constants(double epsilon) {
    if (!(epsilon > 0.0 && epsilon <= 1.0))
        throw Error(Errc::epsilon_out_of_range, "epsilon must lie in (0, 1]");
    ConstantsRecord r;
    r.epsilon = epsilon;
    const double c2 = (40.0 / (epsilon * epsilon)) / std::log(2.0 / epsilon);
    r.C = std::sqrt(c2);
    const double rhs = 4.0 / (epsilon * epsilon);

    // n >= C sqrt(n log n)  <=>  n >= C^2 log n; both conditions are
    // monotone once n exceeds C^2, and no n in [3, C^2] can satisfy the
    // first one, so the least valid point sits in the monotone region.
    auto cond = [&](std::uint64_t n) {
        const double dn = static_cast<double>(n);
        const double ln = std::log(dn);
        return dn >= c2 * ln && r.C * std::sqrt(dn * ln) > rhs;
    };
    std::uint64_t lo = 2, hi = 2;
    while (!cond(hi)) {
        lo = hi;
        hi *= 2;
    }
    while (lo + 1 < hi) {
        std::uint64_t mid = lo + (hi - lo) / 2;
        if (cond(mid))
            hi = mid;
        else
            lo = mid;
    }
    r.n_eps = cond(2) ? 2 : hi;
    assert(cond(r.n_eps) && (r.n_eps == 2 || !cond(r.n_eps - 1)));
    r.sanity_500 = static_cast<double>(r.n_eps) <= 500.0 / std::pow(epsilon, 4);
    return r;
}

VerifierReport verify_fact1(std::uint32_t p) {
    if (!is_prime_u32(p)) throw Error(Errc::not_prime, std::to_string(p) + " is not prime");
    if (p > 13) throw Error(Errc::p_too_large, "exhaustive range is p <= 13");
    const auto t0 = std::chrono::steady_clock::now();
    GroupSpec g = GroupSpec::make({p});

    VerifierReport rep;
    rep.property_id = "fact1";
    rep.params = "p=" + std::to_string(p);

    const std::uint64_t full = (std::uint64_t{1} << p) - 1;
    // odometer over multiplicity vectors (c_1..c_{p-1}) summing to p-1
    std::vector<std::uint32_t> mult(p, 0); // index by element 1..p-1
    auto check = [&](const std::vector<std::uint32_t>& m) {
        std::uint64_t s = 0;
        for (std::uint32_t a = 1; a < p; ++a)
            for (std::uint32_t c = 0; c < m[a]; ++c)
                s = s | ((s << a | s >> (p - a)) & full) | (std::uint64_t{1} << a);
        ++rep.instances_checked;
        if ((s | 1) != full) {
            std::vector<std::uint32_t> items;
            for (std::uint32_t a = 1; a < p; ++a)
                for (std::uint32_t c = 0; c < m[a]; ++c) items.push_back(a);
            rep.violations.push_back(render_set(items));
        }
    };
    // recursive composition enumeration, iterative via stack of remainders
    std::vector<std::uint32_t> m(p, 0);
    auto rec = [&](auto&& self, std::uint32_t elem, std::uint32_t left) -> void {
        if (elem == p - 1) {
            m[elem] = left;
            check(m);
            return;
        }
        for (std::uint32_t c = 0; c <= left; ++c) {
            m[elem] = c;
            self(self, elem + 1, left - c);
        }
    };
    if (p == 2) {
        m[1] = 1;
        check(m);
    } else {
        rec(rec, 1, p - 1);
    }

    // designated witness: the all-ones sequence of length p-2 must fail
    std::uint64_t s = 0;
    for (std::uint32_t c = 0; p >= 2 && c < p - 2; ++c)
        s = s | ((s << 1 | s >> (p - 1)) & full) | 2;
    if ((s | 1) == full)
        rep.violations.push_back("all-ones length p-2 unexpectedly spans Z_p");

    rep.runtime_ms = ms_since(t0);
    return rep;
}

namespace {

/// Enumerate k-combinations of [0, n) ascending-lexicographically.
template <typename F>
void for_each_combination(std::uint32_t n, std::uint32_t k, F&& f) {
    if (k > n) return;
    std::vector<std::uint32_t> c(k);
    std::iota(c.begin(), c.end(), 0);
    while (true) {
        f(c);
        std::int64_t i = static_cast<std::int64_t>(k) - 1;
        while (i >= 0 && c[i] == n - k + i) --i;
        if (i < 0) break;
        ++c[i];
        for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    }
}

ElementSet set_of(const GroupSpec& g, const std::vector<std::uint32_t>& items) {
    ElementSet s(g.order());
    for (auto x : items) s.set(x);
    return s;
}

} // namespace

VerifierReport verify_half_plus_two(const GroupSpec& g, std::uint64_t seed,
                                    std::uint64_t samples) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::uint32_t n = g.order();
    const std::uint32_t k = n / 2 + 2;
    VerifierReport rep;
    rep.property_id = "half-plus-two";
    rep.params = "group=" + g.canonical_key_string() + " size=" + std::to_string(k);
    if (k > n) { // vacuous
        rep.runtime_ms = ms_since(t0);
        return rep;
    }
    auto check = [&](const std::vector<std::uint32_t>& items) {
        ++rep.instances_checked;
        ElementSet s(n);
        for (auto a : items) closure_step(g, s, a);
        if (!s.is_full()) rep.violations.push_back(render_set(items));
    };
    if (n <= 18) {
        for_each_combination(n, k, check);
    } else {
        rep.sampled = true;
        SplitMix rng(seed, /*stream=*/1);
        std::vector<std::uint32_t> pool(n);
        for (std::uint64_t it = 0; it < samples; ++it) {
            std::iota(pool.begin(), pool.end(), 0);
            for (std::uint32_t i = 0; i < k; ++i) {
                std::uint32_t j = i + rng.next_below(n - i);
                std::swap(pool[i], pool[j]);
            }
            std::vector<std::uint32_t> items(pool.begin(), pool.begin() + k);
            std::sort(items.begin(), items.end());
            check(items);
        }
    }
    rep.runtime_ms = ms_since(t0);
    return rep;
}

VerifierReport verify_zero_sum(const GroupSpec& g, std::uint64_t seed, std::uint64_t samples) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::uint32_t n = g.order();
    const std::uint32_t thr =
        static_cast<std::uint32_t>(std::ceil(3.0 * std::sqrt(static_cast<double>(n))));
    VerifierReport rep;
    rep.property_id = "zero-sum";
    rep.params = "group=" + g.canonical_key_string() + " threshold=" + std::to_string(thr);
    if (thr > n) { // vacuous
        rep.runtime_ms = ms_since(t0);
        return rep;
    }
    auto check = [&](const std::vector<std::uint32_t>& items) {
        ++rep.instances_checked;
        if (items.front() == 0) return; // 0 in A: the singleton {0} already sums to zero
        ElementSet s(n);
        for (auto a : items) closure_step(g, s, a);
        if (!s.test(0)) rep.violations.push_back(render_set(items));
    };
    if (n <= 20) {
        for (std::uint32_t k = thr; k <= n; ++k) for_each_combination(n, k, check);
    } else {
        rep.sampled = true;
        SplitMix rng(seed, /*stream=*/2);
        std::vector<std::uint32_t> pool(n);
        for (std::uint64_t it = 0; it < samples; ++it) {
            const std::uint32_t k = thr + rng.next_below(n - thr + 1);
            std::iota(pool.begin(), pool.end(), 0);
            for (std::uint32_t i = 0; i < k; ++i) {
                std::uint32_t j = i + rng.next_below(n - i);
                std::swap(pool[i], pool[j]);
            }
            std::vector<std::uint32_t> items(pool.begin(), pool.begin() + k);
            std::sort(items.begin(), items.end());
            check(items);
        }
    }
    rep.runtime_ms = ms_since(t0);
    return rep;
}

OlsonReport verify_olson_growth(const GroupSpec& g, std::uint32_t max_l) {
    const std::uint32_t n = g.order();
    if (n > 16 || max_l > 6)
        throw Error(Errc::cap_exceeded, "exhaustive range is n <= 16, max_l <= 6");
    const auto t0 = std::chrono::steady_clock::now();

    OlsonReport rep;
    rep.hard.property_id = "olson";
    rep.hard.params = "group=" + g.canonical_key_string() + " max_l=" + std::to_string(max_l);

    // every subset containing 0
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); mask += 2) {
        std::vector<std::uint32_t> items;
        for (std::uint32_t x = 0; x < n; ++x)
            if ((mask >> x) & 1) items.push_back(x);
        ElementSet a = set_of(g, items);
        const std::uint32_t sz = static_cast<std::uint32_t>(items.size());
        ElementSet span = generated_subgroup(g, items).members;

        ElementSet la = a;
        for (std::uint32_t l = 1; l <= max_l; ++l) {
            if (l > 1) {
                ElementSet next(n);
                for (auto x : items) or_shifted(g, next, la, x);
                la = std::move(next);
            }
            ++rep.hard.instances_checked;
            const bool spans = la == span;
            const std::uint32_t lsz = la.count();
            // (a) literal bound |lA| >= |A| + (l-1)(|A|/2 + 1), via 2|lA|
            if (!spans && 2 * lsz < 2 * sz + (l - 1) * (sz + 2)) {
                ++rep.literal_violation_count;
                if (rep.literal_findings.size() < 200)
                    rep.literal_findings.push_back("A=" + render_set(items) +
                                                   " l=" + std::to_string(l) +
                                                   " |lA|=" + std::to_string(lsz));
            }
            // (b) weakened bound |lA| >= ceil((l+1)|A|/2), via 2|lA|
            if (!spans && 2 * lsz < (l + 1) * sz)
                rep.hard.violations.push_back("weakened: A=" + render_set(items) +
                                              " l=" + std::to_string(l));
            // (c) corollary
            if ((l + 1) * sz >= 2 * n && !spans)
                rep.hard.violations.push_back("corollary: A=" + render_set(items) +
                                              " l=" + std::to_string(l));
        }
    }
    rep.hard.runtime_ms = ms_since(t0);
    return rep;
}

SubgroupProfile profile_subgroup_theorem(const GroupSpec& g, std::uint32_t size_threshold,
                                         bool exhaustive, std::uint64_t seed,
                                         std::uint64_t samples_per_size, const Limits& limits) {
    const std::uint32_t n = g.order();
    if (exhaustive && n > 16)
        throw Error(Errc::cap_exceeded, "exhaustive profiling is limited to n <= 16");
    const auto t0 = std::chrono::steady_clock::now();
    (void)all_subgroups(g, limits); // fail early if the lattice is out of reach

    SubgroupProfile prof;
    prof.size_threshold = size_threshold;
    prof.exhaustive = exhaustive;

    std::vector<std::pair<double, std::vector<std::uint32_t>>> ratios;
    auto eval = [&](const std::vector<std::uint32_t>& items) {
        ElementSet a = set_of(g, items);
        ElementSet s = subset_sums(g, a);
        auto big = largest_subgroup_in(g, s, limits);
        const double r =
            big.subgroup ? static_cast<double>(big.subgroup->order) / items.size() : 0.0;
        ratios.emplace_back(r, items);
    };

    if (exhaustive) {
        for (std::uint32_t k = std::max<std::uint32_t>(size_threshold, 1); k <= n; ++k)
            for_each_combination(n, k, eval);
    } else {
        SplitMix rng(seed, /*stream=*/3);
        std::vector<std::uint32_t> pool(n);
        for (std::uint32_t k = std::max<std::uint32_t>(size_threshold, 1); k <= n; ++k) {
            for (std::uint64_t it = 0; it < samples_per_size; ++it) {
                std::iota(pool.begin(), pool.end(), 0);
                for (std::uint32_t i = 0; i < k; ++i) {
                    std::uint32_t j = i + rng.next_below(n - i);
                    std::swap(pool[i], pool[j]);
                }
                std::vector<std::uint32_t> items(pool.begin(), pool.begin() + k);
                std::sort(items.begin(), items.end());
                eval(items);
            }
        }
    }

    prof.instances = ratios.size();
    if (!ratios.empty()) {
        std::sort(ratios.begin(), ratios.end());
        auto at = [&](double q) {
            const std::size_t i = static_cast<std::size_t>(q * (ratios.size() - 1));
            return ratios[i].first;
        };
        prof.r_min = ratios.front().first;
        prof.r_q1 = at(0.25);
        prof.r_median = at(0.5);
        prof.r_q3 = at(0.75);
        prof.r_max = ratios.back().first;
        for (std::size_t i = 0; i < ratios.size() && i < 5; ++i)
            prof.worst.push_back({ratios[i].first, ratios[i].second});
    }
    prof.runtime_ms = ms_since(t0);
    return prof;
}

SpreadResult sample_spread_subset(const GroupSpec& g, const ElementSet& s, double delta,
                                  std::uint64_t seed, std::uint32_t max_attempts) {
    if (!(delta > 0.0 && delta <= 0.5))
        throw Error(Errc::epsilon_out_of_range, "delta must lie in (0, 1/2]");
    if (s.none()) throw Error(Errc::empty_set, "source set is empty");

    const auto members = s.members();
    const double slen = static_cast<double>(members.size());
    auto maxsubs = maximal_subgroups(g);

    // hypothesis: no maximal subgroup holds a (1 - delta/2) fraction of s
    for (const auto& h : maxsubs) {
        ElementSet inter = s;
        inter &= h.members;
        if (static_cast<double>(inter.count()) / slen >= 1.0 - delta / 2.0)
            throw Error(Errc::precondition_violated,
                        "a maximal subgroup holds a (1 - delta/2) fraction of the set");
    }

    const double eps = delta / 10.0;
    const double rho = (1.0 + 2.0 * eps) * delta / (2.0 * (1.0 + delta) * (1.0 + delta));
    // the size window has width 2 eps rho |s| < 1 at desk scale, so it is
    // widened outward to the nearest integers
    const auto lo = static_cast<std::uint32_t>(std::floor((1.0 - eps) * rho * slen));
    const auto hi = static_cast<std::uint32_t>(std::ceil((1.0 + eps) * rho * slen));
    const double cap = (1.0 + eps) * rho * (1.0 - 5.0 * eps) * slen;
    const auto target = static_cast<std::uint32_t>(std::floor(rho * slen / (1.0 + 2.0 * eps)));
    if (target == 0)
        throw Error(Errc::precondition_violated,
                    "source set is too small for the sampling constants (target size 0)");

    SpreadResult res;
    res.rho = rho;
    res.target_size = target;

    std::vector<std::uint32_t> s1;
    for (std::uint32_t attempt = 0; attempt < max_attempts; ++attempt) {
        res.attempts_used = attempt + 1;
        s1.clear();
        for (std::size_t i = 0; i < members.size(); ++i)
            if (rng_u01(seed, attempt, i) < rho) s1.push_back(members[i]);
        if (s1.size() < std::max<std::uint32_t>(lo, 1) || s1.size() > hi ||
            s1.size() < target)
            continue;
        ++res.size_window_hits;
        bool capped = false;
        for (const auto& h : maxsubs) {
            std::uint32_t c = 0;
            for (auto x : s1) c += h.members.test(x);
            if (static_cast<double>(c) > cap) {
                capped = true;
                break;
            }
        }
        if (capped) {
            ++res.cap_failures;
            continue;
        }
        // first `target` members in index order (s1 is already ascending)
        ElementSet spread(g.order());
        for (std::uint32_t i = 0; i < target; ++i) spread.set(s1[i]);
        // re-verify the conclusion before returning it
        bool ok = true;
        for (const auto& h : maxsubs) {
            ElementSet inter = spread;
            inter &= h.members;
            if (static_cast<double>(inter.count()) / target > 1.0 - delta / 10.0) {
                ok = false;
                break;
            }
        }
        if (!ok) {
            ++res.verify_failures;
            continue;
        }
        res.spread = std::move(spread);
        return res;
    }
    return res;
}

} // namespace sumstruct
