#include "sumstruct/sumset.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "sumstruct/errors.hpp"

namespace sumstruct {

void or_shifted(const GroupSpec& g, ElementSet& dst, const ElementSet& src, std::uint32_t a) {
    g.check_index(a);
    if (g.factors().size() == 1) {
        dst.or_rotated(src, a);
        return;
    }
    for (std::int64_t x = src.next_member(0); x >= 0;
         x = src.next_member(static_cast<std::uint32_t>(x) + 1))
        dst.set(g.add(static_cast<std::uint32_t>(x), a));
}

void closure_step(const GroupSpec& g, ElementSet& s, std::uint32_t a) {
    ElementSet shifted(g.order());
    or_shifted(g, shifted, s, a);
    s |= shifted;
    s.set(a);
}

ElementSet subset_sums(const GroupSpec& g, const MultisetSequence& items, const Limits& limits) {
    if (items.total_length() > limits.sequence_cap)
        throw Error(Errc::length_cap_exceeded,
                    "sequence length " + std::to_string(items.total_length()) + " exceeds cap");
    ElementSet s(g.order());
    for (const auto& e : items.entries()) {
        g.check_index(e.element);
        for (std::uint32_t i = 0; i < e.multiplicity; ++i) closure_step(g, s, e.element);
    }
    return s;
}

ElementSet subset_sums(const GroupSpec& g, const ElementSet& set, const Limits& limits) {
    if (set.count() > limits.sequence_cap)
        throw Error(Errc::length_cap_exceeded, "set size exceeds sequence cap");
    ElementSet s(g.order());
    for (auto a : set.members()) closure_step(g, s, a);
    return s;
}

ElementSet iterated_sumset(const GroupSpec& g, const ElementSet& a, std::uint32_t l) {
    if (l < 1) throw Error(Errc::non_positive_l, "l must be >= 1");
    if (a.none()) throw Error(Errc::empty_set, "iterated sumset of an empty set");
    auto gens = a.members();
    ElementSet cur = a;
    for (std::uint32_t step = 1; step < l; ++step) {
        ElementSet next(g.order());
        for (auto x : gens) or_shifted(g, next, cur, x);
        cur = std::move(next);
    }
    return cur;
}

std::uint64_t RepCountTable::total() const {
    std::uint64_t t = 0;
    for (auto c : counts) t += c;
    return t;
}

RepCountTable representation_counts(const GroupSpec& g, const ElementSet& a) {
    auto mem = a.members();
    if (mem.size() < 2)
        throw Error(Errc::set_too_small, "representation counts need at least 2 elements");
    RepCountTable t;
    t.set_size = static_cast<std::uint32_t>(mem.size());
    t.counts.assign(g.order(), 0);
    for (std::size_t i = 0; i < mem.size(); ++i)
        for (std::size_t j = i + 1; j < mem.size(); ++j) ++t.counts[g.add(mem[i], mem[j])];
    const std::uint64_t expect = std::uint64_t{t.set_size} * (t.set_size - 1) / 2;
    assert(t.total() == expect);
    (void)expect;
    return t;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> greedy_disjoint_pairs(
    const GroupSpec& g, const ElementSet& a, const std::vector<std::uint32_t>& targets) {
    if (targets.empty()) throw Error(Errc::non_positive_l, "no targets given");
    auto mem = a.members();
    std::vector<bool> used(g.order(), false);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    out.reserve(targets.size());
    for (std::size_t ti = 0; ti < targets.size(); ++ti) {
        const std::uint32_t x = targets[ti];
        g.check_index(x);
        bool found = false;
        // representation list in (smaller, larger) ascending order
        for (std::size_t i = 0; i < mem.size() && !found; ++i) {
            if (used[mem[i]]) continue;
            for (std::size_t j = i + 1; j < mem.size(); ++j) {
                if (used[mem[j]]) continue;
                if (g.add(mem[i], mem[j]) == x) {
                    used[mem[i]] = used[mem[j]] = true;
                    out.emplace_back(mem[i], mem[j]);
                    found = true;
                    break;
                }
            }
        }
        if (!found)
            throw Error(Errc::no_disjoint_representation,
                        "greedy exhausted at target position " + std::to_string(ti),
                        static_cast<long long>(ti));
    }
    return out;
}

LargestSubgroupResult largest_subgroup_in(const GroupSpec& g, const ElementSet& s,
                                          const Limits& limits) {
    LargestSubgroupResult res;
    if (!s.test(0)) return res;
    auto lattice = all_subgroups(g, limits);
    const Subgroup* best = nullptr;
    for (const auto& h : *lattice) {
        if (!s.contains_all(h.members)) continue;
        if (!best || h.order > best->order) {
            best = &h;
            res.count_at_max = 1;
        } else if (h.order == best->order) {
            ++res.count_at_max;
            if (ElementSet::compare_members(h.members, best->members) < 0) best = &h;
        }
    }
    assert(best != nullptr); // the trivial subgroup always fits once 0 in s
    res.subgroup = *best;
    return res;
}

LevelDecomposition level_decomposition(const GroupSpec& g, const ElementSet& a, double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw Error(Errc::epsilon_out_of_range, "epsilon must lie in (0, 1)");
    RepCountTable reps = representation_counts(g, a);

    LevelDecomposition d;
    d.K = 2.0 / epsilon;
    d.M = a.count() / 2.0;
    d.large_threshold = (1.0 - epsilon) * a.count();
    // largest j with K^{-j} M >= 1
    std::uint32_t j0 = 0;
    for (double t = d.M / d.K; t >= 1.0; t /= d.K) ++j0;
    d.j0 = j0;

    std::vector<double> bound(j0 + 2); // bound[j] = K^{-j} M
    bound[0] = d.M;
    for (std::uint32_t j = 1; j <= j0 + 1; ++j) bound[j] = bound[j - 1] / d.K;

    for (std::uint32_t j = 1; j <= j0 + 1; ++j) {
        LevelDecomposition::Level lvl{j, bound[j], bound[j - 1], ElementSet(g.order()),
                                      j == j0 + 1, false};
        for (std::uint32_t x = 0; x < g.order(); ++x) {
            const double m = reps.counts[x];
            if (m < 1.0) continue;
            const bool in = lvl.is_tail ? (m <= lvl.upper) : (m > lvl.lower && m <= lvl.upper);
            if (in) lvl.members.set(x);
        }
        lvl.large = lvl.members.count() > d.large_threshold;
        d.levels.push_back(std::move(lvl));
    }
    return d;
}

} // namespace sumstruct
