#include "sumstruct/scan.hpp"

#include <algorithm>
#include <map>

namespace sumstruct {

namespace {

void partitions_of(std::uint32_t e, std::uint32_t mx, std::vector<std::uint32_t>& cur,
                   std::vector<std::vector<std::uint32_t>>& out) {
    if (e == 0) {
        out.push_back(cur);
        return;
    }
    for (std::uint32_t part = std::min(e, mx); part >= 1; --part) {
        cur.push_back(part);
        partitions_of(e - part, part, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<std::vector<std::uint32_t>> abelian_groups_of_order(std::uint32_t n) {
    std::map<std::uint32_t, std::uint32_t> fac;
    std::uint32_t m = n;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= m; ++d)
        while (m % d == 0) {
            ++fac[d];
            m /= d;
        }
    if (m > 1) ++fac[m];

    std::vector<std::vector<std::uint32_t>> result{{}};
    for (const auto& [p, e] : fac) {
        std::vector<std::vector<std::uint32_t>> parts;
        std::vector<std::uint32_t> cur;
        partitions_of(e, e, cur, parts);
        std::vector<std::vector<std::uint32_t>> next;
        for (const auto& base : result) {
            for (const auto& lam : parts) {
                auto factors = base;
                for (auto exp : lam) {
                    std::uint32_t pe = 1;
                    for (std::uint32_t i = 0; i < exp; ++i) pe *= p;
                    factors.push_back(pe);
                }
                next.push_back(std::move(factors));
            }
        }
        result = std::move(next);
    }
    for (auto& factors : result) std::sort(factors.begin(), factors.end());
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

std::vector<std::vector<std::uint32_t>> abelian_groups_in_range(std::uint32_t lo,
                                                                std::uint32_t hi) {
    std::vector<std::vector<std::uint32_t>> out;
    for (std::uint32_t n = std::max<std::uint32_t>(lo, 2); n <= hi; ++n)
        for (auto& f : abelian_groups_of_order(n)) out.push_back(std::move(f));
    return out;
}

} // namespace sumstruct
