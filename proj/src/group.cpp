#include "sumstruct/group.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <mutex>
#include <numeric>
#include <unordered_set>

#include "sumstruct/errors.hpp"

namespace sumstruct {

namespace {

std::vector<std::uint32_t> prime_factorize(std::uint64_t m) {
    std::vector<std::uint32_t> out;
    for (std::uint64_t d = 2; d * d <= m; ++d) {
        while (m % d == 0) {
            out.push_back(static_cast<std::uint32_t>(d));
            m /= d;
        }
    }
    if (m > 1) out.push_back(static_cast<std::uint32_t>(m));
    return out;
}

} // namespace

GroupSpec GroupSpec::make(std::vector<std::uint32_t> factor_orders, const Limits& limits) {
    if (factor_orders.empty()) throw Error(Errc::empty_spec, "no cyclic factors given");
    std::uint64_t order = 1;
    for (auto d : factor_orders) {
        if (d < 2) throw Error(Errc::factor_too_small, "factor " + std::to_string(d) + " < 2");
        order *= d;
        if (order > limits.order_cap)
            throw Error(Errc::order_cap_exceeded,
                        "order exceeds cap " + std::to_string(limits.order_cap));
    }
    GroupSpec g;
    g.factors_ = std::move(factor_orders);
    g.n_ = static_cast<std::uint32_t>(order);
    std::uint64_t b = 1;
    for (auto d : g.factors_) {
        g.radix_.push_back(b);
        b *= d;
    }
    g.primes_ = prime_factorize(order);
    std::sort(g.primes_.begin(), g.primes_.end());
    // primary decomposition: each Z_d splits into Z_{p^e} per prime power of d
    for (auto d : g.factors_) {
        std::uint32_t m = d;
        for (std::uint32_t p = 2; static_cast<std::uint64_t>(p) * p <= m; ++p) {
            if (m % p == 0) {
                std::uint32_t pe = 1;
                while (m % p == 0) {
                    pe *= p;
                    m /= p;
                }
                g.canonical_.push_back(pe);
            }
        }
        if (m > 1) g.canonical_.push_back(m);
    }
    std::sort(g.canonical_.begin(), g.canonical_.end());
    assert(std::accumulate(g.canonical_.begin(), g.canonical_.end(), std::uint64_t{1},
                           std::multiplies<>()) == order);
    return g;
}

std::string GroupSpec::canonical_key_string() const {
    std::string s;
    for (std::size_t i = 0; i < canonical_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(canonical_[i]);
    }
    return s;
}

std::uint32_t GroupSpec::encode(const std::vector<std::uint32_t>& coords) const {
    if (coords.size() != factors_.size())
        throw Error(Errc::index_out_of_range, "coordinate arity mismatch");
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] >= factors_[i])
            throw Error(Errc::index_out_of_range, "coordinate exceeds factor order");
        idx += coords[i] * radix_[i];
    }
    return static_cast<std::uint32_t>(idx);
}

std::vector<std::uint32_t> GroupSpec::decode(std::uint32_t index) const {
    check_index(index);
    std::vector<std::uint32_t> c(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        c[i] = index % factors_[i];
        index /= factors_[i];
    }
    return c;
}

std::uint32_t GroupSpec::add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t out = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        const std::uint32_t d = factors_[i];
        std::uint32_t xa = a % d, xb = b % d;
        a /= d;
        b /= d;
        std::uint32_t s = xa + xb;
        if (s >= d) s -= d;
        out += s * static_cast<std::uint32_t>(radix_[i]);
    }
    return out;
}

std::uint32_t GroupSpec::negate(std::uint32_t a) const {
    std::uint32_t out = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        const std::uint32_t d = factors_[i];
        std::uint32_t x = a % d;
        a /= d;
        out += (x ? d - x : 0) * static_cast<std::uint32_t>(radix_[i]);
    }
    return out;
}

std::uint32_t GroupSpec::element_order(std::uint32_t a) const {
    check_index(a);
    std::uint64_t ord = 1;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        const std::uint32_t d = factors_[i];
        std::uint32_t x = a % d;
        a /= d;
        std::uint32_t k = d / std::gcd(d, x == 0 ? d : x);
        ord = std::lcm(ord, std::uint64_t{k});
    }
    return static_cast<std::uint32_t>(ord);
}

void GroupSpec::check_index(std::uint32_t a) const {
    if (a >= n_)
        throw Error(Errc::index_out_of_range,
                    "element " + std::to_string(a) + " not in [0, " + std::to_string(n_) + ")");
}

namespace {

ElementSet closure_of(const GroupSpec& g, const std::vector<std::uint32_t>& seeds) {
    ElementSet mem(g.order());
    mem.set(0);
    std::vector<std::uint32_t> frontier{0};
    while (!frontier.empty()) {
        std::uint32_t x = frontier.back();
        frontier.pop_back();
        for (auto s : seeds) {
            std::uint32_t y = g.add(x, s);
            if (!mem.test(y)) {
                mem.set(y);
                frontier.push_back(y);
            }
        }
    }
    return mem;
}

/// Deterministic small generating list: scan members ascending, keep those
/// not generated by the list so far.
std::vector<std::uint32_t> greedy_generators(const GroupSpec& g, const ElementSet& members) {
    std::vector<std::uint32_t> gens;
    ElementSet reach(g.order());
    reach.set(0);
    for (std::int64_t x = members.next_member(0); x >= 0;
         x = members.next_member(static_cast<std::uint32_t>(x) + 1)) {
        if (x == 0) continue;
        if (!reach.test(static_cast<std::uint32_t>(x))) {
            gens.push_back(static_cast<std::uint32_t>(x));
            reach = closure_of(g, gens);
        }
    }
    return gens;
}

Subgroup subgroup_from_members(const GroupSpec& g, ElementSet members) {
    Subgroup h;
    h.order = members.count();
    h.index = g.order() / h.order;
    h.generators = greedy_generators(g, members);
    h.members = std::move(members);
    return h;
}

} // namespace

Subgroup generated_subgroup(const GroupSpec& g, const std::vector<std::uint32_t>& seeds) {
    for (auto s : seeds) g.check_index(s);
    Subgroup h;
    h.members = closure_of(g, seeds);
    h.order = h.members.count();
    h.index = g.order() / h.order;
    h.generators = seeds;
    std::sort(h.generators.begin(), h.generators.end());
    h.generators.erase(std::unique(h.generators.begin(), h.generators.end()),
                       h.generators.end());
    return h;
}

std::vector<Subgroup> maximal_subgroups(const GroupSpec& g) {
    const std::uint32_t n = g.order();
    std::vector<Subgroup> out;
    std::vector<std::uint32_t> distinct_primes;
    for (auto p : g.prime_factors())
        if (distinct_primes.empty() || distinct_primes.back() != p) distinct_primes.push_back(p);

    for (auto p : distinct_primes) {
        std::vector<std::size_t> cols; // factors with p | d_i
        for (std::size_t i = 0; i < g.factors().size(); ++i)
            if (g.factors()[i] % p == 0) cols.push_back(i);
        const std::size_t r = cols.size();

        // residue of each element's relevant coordinates mod p
        std::vector<std::uint8_t> res(n * r);
        for (std::uint32_t x = 0; x < n; ++x) {
            std::uint32_t t = x;
            std::size_t ci = 0;
            for (std::size_t i = 0; i < g.factors().size(); ++i) {
                std::uint32_t coord = t % g.factors()[i];
                t /= g.factors()[i];
                if (ci < r && cols[ci] == i) {
                    res[x * r + ci] = static_cast<std::uint8_t>(coord % p);
                    ++ci;
                }
            }
        }

        // projective vectors over Z_p^r: first nonzero entry is 1,
        // entries after it free
        std::vector<std::uint32_t> c(r, 0);
        for (std::size_t lead = 0; lead < r; ++lead) {
            std::uint64_t combos = 1;
            for (std::size_t j = lead + 1; j < r; ++j) combos *= p;
            for (std::uint64_t code = 0; code < combos; ++code) {
                std::fill(c.begin(), c.end(), 0);
                c[lead] = 1;
                std::uint64_t t = code;
                for (std::size_t j = lead + 1; j < r; ++j) {
                    c[j] = static_cast<std::uint32_t>(t % p);
                    t /= p;
                }
                ElementSet members(n);
                for (std::uint32_t x = 0; x < n; ++x) {
                    std::uint64_t acc = 0;
                    for (std::size_t j = lead; j < r; ++j) acc += c[j] * res[x * r + j];
                    if (acc % p == 0) members.set(x);
                }
                out.push_back(subgroup_from_members(g, std::move(members)));
            }
        }
    }

    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.index != b.index) return a.index < b.index;
        return ElementSet::compare_members(a.members, b.members) < 0;
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const Subgroup& a, const Subgroup& b) {
                              return a.members == b.members;
                          }),
              out.end());
    return out;
}

bool is_subgroup_members(const GroupSpec& g, const ElementSet& members) {
    if (members.universe() != g.order()) return false;
    if (!members.test(0)) return false;
    auto mem = members.members();
    for (auto x : mem)
        for (auto y : mem)
            if (!members.test(g.add(x, y))) return false;
    return true;
}

namespace {

std::mutex g_lattice_mutex;
std::map<std::vector<std::uint32_t>, std::shared_ptr<const std::vector<Subgroup>>> g_lattice_memo;

std::vector<Subgroup> build_lattice(const GroupSpec& g) {
    const std::uint32_t n = g.order();
    std::unordered_set<ElementSet, ElementSetHash> seen;
    std::vector<ElementSet> subs;

    // distinct cyclic subgroups; <x> == <y> iff y in <x> and orders match,
    // so a membership probe against same-order sets dedupes before building
    std::vector<std::vector<std::size_t>> by_order(n + 1);
    for (std::uint32_t x = 0; x < n; ++x) {
        std::uint32_t ord = g.element_order(x);
        bool dup = false;
        for (auto si : by_order[ord])
            if (subs[si].test(x)) {
                dup = true;
                break;
            }
        if (dup) continue;
        ElementSet c(n);
        std::uint32_t y = 0;
        do {
            c.set(y);
            y = g.add(y, x);
        } while (y != 0);
        by_order[ord].push_back(subs.size());
        seen.insert(c);
        subs.push_back(std::move(c));
    }

    // join closure: H v K = {h + k}
    for (std::size_t i = 0; i < subs.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (subs[i].contains_all(subs[j]) || subs[j].contains_all(subs[i])) continue;
            ElementSet join(n);
            auto hm = subs[i].members();
            auto km = subs[j].members();
            for (auto h : hm)
                for (auto k : km) join.set(g.add(h, k));
            if (seen.insert(join).second) subs.push_back(std::move(join));
        }
    }

    std::vector<Subgroup> out;
    out.reserve(subs.size());
    for (auto& m : subs) out.push_back(subgroup_from_members(g, std::move(m)));
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.order != b.order) return a.order < b.order;
        return ElementSet::compare_members(a.members, b.members) < 0;
    });
    return out;
}

} // namespace

std::shared_ptr<const std::vector<Subgroup>> all_subgroups(const GroupSpec& g,
                                                           const Limits& limits) {
    if (g.order() > limits.lattice_cap)
        throw Error(Errc::lattice_cap_exceeded,
                    "order " + std::to_string(g.order()) + " exceeds lattice cap " +
                        std::to_string(limits.lattice_cap));
    {
        std::lock_guard<std::mutex> lock(g_lattice_mutex);
        auto it = g_lattice_memo.find(g.factors());
        if (it != g_lattice_memo.end()) return it->second;
    }
    auto built = std::make_shared<const std::vector<Subgroup>>(build_lattice(g));
    std::lock_guard<std::mutex> lock(g_lattice_mutex);
    auto [it, inserted] = g_lattice_memo.emplace(g.factors(), built);
    return it->second;
}

std::vector<std::uint32_t> coset_labels(const GroupSpec& g, const Subgroup& h) {
    if (!is_subgroup_members(g, h.members)) {
        if (h.members.universe() != g.order())
            throw Error(Errc::not_subgroup_of_g, "member set universe differs from group order");
        throw Error(Errc::not_a_subgroup, "member set is not closed or misses 0");
    }
    const std::uint32_t n = g.order();
    auto hm = h.members.members();
    std::vector<std::uint32_t> label(n, n);
    std::uint32_t next = 0;
    for (std::uint32_t x = 0; x < n; ++x) {
        if (label[x] != n) continue;
        for (auto m : hm) label[g.add(x, m)] = next;
        ++next;
    }
    assert(next == g.order() / h.order);
    return label;
}

} // namespace sumstruct
