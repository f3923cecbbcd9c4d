#include "sumstruct/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "sumstruct/dfs.hpp"
#include "sumstruct/errors.hpp"
#include "sumstruct/sumset.hpp"

namespace sumstruct {

bool is_complete(const GroupSpec& g, const MultisetSequence& items, const Limits& limits) {
    return subset_sums(g, items, limits).is_full();
}

bool is_complete(const GroupSpec& g, const ElementSet& set, const Limits& limits) {
    return subset_sums(g, set, limits).is_full();
}

NicenessVerdict is_nice(const GroupSpec& g, const ElementSet& a, const Limits& limits) {
    NicenessVerdict v;
    for (auto& h : maximal_subgroups(g)) {
        ElementSet ah = a;
        ah &= h.members;
        ElementSet span = subset_sums(g, ah, limits);
        NicenessVerdict::Detail d{h, ah.count(), span.count(), span == h.members};
        if (d.spans && !v.nice) {
            v.nice = true;
            v.witness = h; // maximal_subgroups order is (index, members): first hit wins
        }
        v.per_subgroup.push_back(std::move(d));
    }
    return v;
}

FactBoundsReport fact_bounds_check(const GroupSpec& g, const ElementSet& a,
                                   const Limits& limits) {
    if (is_complete(g, a, limits))
        throw Error(Errc::not_incomplete, "bound checks require an incomplete set");

    FactBoundsReport rep;
    NicenessVerdict nice = is_nice(g, a, limits);
    rep.nice = nice.nice;

    for (const auto& d : nice.per_subgroup) {
        if (!d.spans) continue;
        const Subgroup& h = d.subgroup;
        const std::uint32_t q = h.index;

        ElementSet outside = a;
        outside.subtract(h.members);
        ElementSet missing = h.members;
        missing.subtract(a);

        FactBoundsReport::Row row;
        row.subgroup_index_q = q;
        row.subgroup_members = h.members;
        row.a_minus_h = outside.count();
        row.h_minus_a = missing.count();
        row.size_bound_ok = row.a_minus_h <= q - 2;

        // the projected sequence is incomplete in the quotient iff the
        // sumset of A \ H misses a whole coset (sums commute with the
        // projection)
        auto labels = coset_labels(g, h);
        for (auto x : outside.members()) row.projected_labels.push_back(labels[x]);
        std::sort(row.projected_labels.begin(), row.projected_labels.end());
        if (outside.none()) {
            row.projection_incomplete = true; // empty sequence spans nothing
        } else {
            ElementSet sums = subset_sums(g, outside, limits);
            std::vector<bool> hit(q, false);
            for (auto x : sums.members()) hit[labels[x]] = true;
            row.projection_incomplete =
                !std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
        }
        rep.all_ok = rep.all_ok && row.size_bound_ok && row.projection_incomplete;
        rep.rows.push_back(std::move(row));
    }

    if (rep.nice) {
        rep.global_bound_checked = true;
        const std::uint32_t p = g.smallest_prime();
        rep.global_bound_ok = a.count() <= g.order() / p + p - 2;
        rep.all_ok = rep.all_ok && rep.global_bound_ok;
    }
    return rep;
}

namespace {

bool is_prime_u32(std::uint32_t k) {
    if (k < 2) return false;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= k; ++d)
        if (k % d == 0) return false;
    return true;
}

} // namespace

TheoryCritical theory_critical_number(const GroupSpec& g) {
    const std::uint32_t n = g.order();
    TheoryCritical t;
    if (is_prime_u32(n)) {
        t.kind = TheoryCritical::Kind::upper_bound_only;
        t.hi = static_cast<std::uint32_t>(std::floor(std::sqrt(4.0 * n - 7.0)));
        t.case_name = "prime order: c <= floor(sqrt(4n-7))";
        return t;
    }
    const std::uint32_t p = g.smallest_prime();
    const std::uint32_t h = n / p;
    const bool is_z2_cubed = g.canonical_key() == std::vector<std::uint32_t>{2, 2, 2};
    if (p == 2) {
        t.kind = TheoryCritical::Kind::exact;
        if (h >= 5 || is_z2_cubed) {
            t.lo = t.hi = h;
            t.case_name = "p=2, h>=5 or G=Z_2^3: c = h";
        } else {
            t.lo = t.hi = h + 1;
            t.case_name = "p=2, h<=4, G!=Z_2^3: c = h+1";
        }
        return t;
    }
    if (is_prime_u32(h)) {
        if ((h == p && p >= 3) || h >= 2 * p + 1) {
            t.kind = TheoryCritical::Kind::exact;
            t.lo = t.hi = p + h - 2;
            t.case_name = "h prime, h=p>=3 or h>=2p+1: c = p+h-2";
        } else {
            t.kind = TheoryCritical::Kind::interval;
            t.lo = p + h - 2;
            t.hi = p + h - 1;
            t.case_name = "h prime: p+h-2 <= c <= p+h-1";
        }
        return t;
    }
    t.kind = TheoryCritical::Kind::exact;
    t.lo = t.hi = p + h - 2;
    t.case_name = "p>=3, h composite: c = p+h-2";
    return t;
}

namespace {

/// Maximize subset size subject to the closure staying incomplete.
/// Lexicographically first witness: traversal is subset-lex order and the
/// incumbent only improves strictly.
struct MaxIncompleteVisitor : DfsVisitorBase {
    const ElementSet* full;
    std::uint32_t universe_size;
    std::int64_t best = -1;
    std::vector<std::uint32_t> best_positions;

    VisitAction enter(const DfsNode& node) {
        if (node.closure == *full) return VisitAction::prune; // supersets all complete
        if (static_cast<std::int64_t>(node.depth) > best) {
            best = node.depth;
            best_positions = node.chosen_positions;
        }
        if (static_cast<std::int64_t>(node.depth) + (universe_size - node.next_position) <= best)
            return VisitAction::prune; // cannot beat the incumbent
        return VisitAction::descend;
    }
};

} // namespace

MaxIncompleteResult max_incomplete_set(const GroupSpec& g, bool allow_zero,
                                       const Budget& budget) {
    std::vector<std::uint32_t> universe;
    for (std::uint32_t x = allow_zero ? 0 : 1; x < g.order(); ++x) universe.push_back(x);

    ElementSet full = ElementSet::full(g.order());
    MaxIncompleteVisitor vis;
    vis.full = &full;
    vis.universe_size = static_cast<std::uint32_t>(universe.size());
    DfsStats stats = dfs_closure_enumerate(g, universe, vis, budget);

    MaxIncompleteResult res;
    res.size = static_cast<std::uint32_t>(std::max<std::int64_t>(vis.best, 0));
    res.witness = ElementSet(g.order());
    for (auto pos : vis.best_positions) res.witness.set(universe[pos]);
    res.nodes = stats.nodes;
    res.truncated = stats.truncated;
    return res;
}

CriticalNumberResult critical_number(const GroupSpec& g, const Budget& budget) {
    if (g.order() < 2) throw Error(Errc::empty_spec, "group too small");
    MaxIncompleteResult mi = max_incomplete_set(g, /*allow_zero=*/false, budget);
    CriticalNumberResult res;
    res.max_incomplete_lower_bound = mi.size;
    res.witness_incomplete = mi.witness;
    res.nodes = mi.nodes;
    res.truncated = mi.truncated;
    if (!mi.truncated) res.exact = mi.size + 1;
    res.theory = theory_critical_number(g);
    res.theory_consistent = res.exact.has_value() && res.theory.consistent_with(*res.exact);
    return res;
}

namespace {

/// Incomplete and not nice. Tracks one closure stack per maximal subgroup;
/// nice nodes prune (a spanned subgroup stays spanned in every superset).
struct MaxNonNiceVisitor : DfsVisitorBase {
    const GroupSpec* g;
    const ElementSet* full;
    const std::vector<Subgroup>* maximal;
    std::uint32_t universe_size;
    std::vector<std::vector<ElementSet>> span_stacks; // [subgroup][depth]
    std::int64_t best = -1;
    std::vector<std::uint32_t> best_positions;

    void init(const GroupSpec& group, const std::vector<Subgroup>& maxsubs,
              std::uint32_t universe) {
        g = &group;
        maximal = &maxsubs;
        universe_size = universe;
        span_stacks.assign(maxsubs.size(), {});
        for (auto& st : span_stacks) st.emplace_back(group.order());
    }

    VisitAction enter(const DfsNode& node) {
        const std::uint32_t d = node.depth;
        bool nice = false;
        if (d > 0) {
            const std::uint32_t a = node.chosen_positions.back(); // universe == element index
            for (std::size_t i = 0; i < maximal->size(); ++i) {
                auto& st = span_stacks[i];
                if (st.size() <= d) st.emplace_back(g->order());
                st[d] = st[d - 1];
                if ((*maximal)[i].members.test(a)) closure_step(*g, st[d], a);
                if (st[d] == (*maximal)[i].members) nice = true;
            }
        }
        if (node.closure == *full) return VisitAction::prune;
        if (nice) return VisitAction::prune;
        if (static_cast<std::int64_t>(d) > best) {
            best = d;
            best_positions = node.chosen_positions;
        }
        if (static_cast<std::int64_t>(d) + (universe_size - node.next_position) <= best)
            return VisitAction::prune;
        return VisitAction::descend;
    }
};

} // namespace

MaxNonNiceResult max_non_nice_incomplete_set(const GroupSpec& g, const Budget& budget,
                                             double delta) {
    if (g.prime_factors().size() < 2)
        throw Error(Errc::not_composite, "needs at least two prime factors");

    std::vector<std::uint32_t> universe(g.order());
    for (std::uint32_t x = 0; x < g.order(); ++x) universe[x] = x;

    auto maxsubs = maximal_subgroups(g);
    ElementSet full = ElementSet::full(g.order());
    MaxNonNiceVisitor vis;
    vis.full = &full;
    vis.init(g, maxsubs, g.order());
    DfsStats stats = dfs_closure_enumerate(g, universe, vis, budget);

    MaxNonNiceResult res;
    res.size = static_cast<std::uint32_t>(std::max<std::int64_t>(vis.best, 0));
    res.witness = ElementSet(g.order());
    for (auto pos : vis.best_positions) res.witness.set(pos);
    res.nodes = stats.nodes;
    res.truncated = stats.truncated;
    res.delta = delta;
    const double n = g.order();
    const double p1 = g.prime_factors()[0];
    const double p2 = g.prime_factors()[1];
    res.threshold_single_prime = (5.0 / 6.0 + delta) * n / p1;
    res.threshold_two_primes = (1.0 + delta) * n / (p1 * p2);
    return res;
}

} // namespace sumstruct
