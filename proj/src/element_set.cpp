#include "sumstruct/element_set.hpp"

#include <bit>
#include <cassert>

namespace sumstruct {

ElementSet::ElementSet(std::uint32_t universe)
    : n_(universe), words_((universe + 63) / 64, 0) {}

ElementSet ElementSet::full(std::uint32_t universe) {
    ElementSet s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    if (!s.words_.empty()) s.words_.back() &= s.tail_mask();
    return s;
}

void ElementSet::clear() {
    for (auto& w : words_) w = 0;
}

std::uint32_t ElementSet::count() const {
    std::uint32_t c = 0;
    for (auto w : words_) c += static_cast<std::uint32_t>(std::popcount(w));
    return c;
}

bool ElementSet::none() const {
    for (auto w : words_)
        if (w) return false;
    return true;
}

ElementSet& ElementSet::operator|=(const ElementSet& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
}

ElementSet& ElementSet::operator&=(const ElementSet& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
}

ElementSet& ElementSet::subtract(const ElementSet& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
}

bool ElementSet::contains_all(const ElementSet& o) const {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (o.words_[i] & ~words_[i]) return false;
    return true;
}

std::int64_t ElementSet::next_member(std::uint32_t from) const {
    if (from >= n_) return -1;
    std::size_t wi = from >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
        if (w) return static_cast<std::int64_t>((wi << 6) + std::countr_zero(w));
        if (++wi >= words_.size()) return -1;
        w = words_[wi];
    }
}

std::vector<std::uint32_t> ElementSet::members() const {
    std::vector<std::uint32_t> out;
    out.reserve(count());
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
        std::uint64_t w = words_[wi];
        while (w) {
            out.push_back(static_cast<std::uint32_t>((wi << 6) + std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

int ElementSet::compare_members(const ElementSet& a, const ElementSet& b) {
    assert(a.n_ == b.n_);
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
        std::uint64_t diff = a.words_[i] ^ b.words_[i];
        if (!diff) continue;
        const auto k = static_cast<std::uint32_t>((i << 6) + std::countr_zero(diff));
        // sequences agree below k; the set holding k continues with k, the
        // other with its next member past k (or ends, making it a prefix)
        const bool a_holds = a.test(k);
        const ElementSet& other = a_holds ? b : a;
        const bool other_ends = other.next_member(k + 1) < 0;
        if (a_holds) return other_ends ? 1 : -1;
        return other_ends ? -1 : 1;
    }
    return 0;
}

void ElementSet::or_rotated(const ElementSet& src, std::uint32_t k) {
    assert(n_ == src.n_ && n_ > 0);
    k %= n_;
    if (k == 0) {
        *this |= src;
        return;
    }
    // rotl(x, k) over an n-bit window == (x << k | x >> (n-k)) & mask(n).
    const std::size_t nw = words_.size();
    const unsigned ws = k >> 6, bs = k & 63;
    const std::uint64_t mask = tail_mask();
    auto word_shl = [&](std::size_t i) -> std::uint64_t {
        // word i of (src << k), unbounded width
        std::uint64_t lo = (i >= ws) ? src.words_[i - ws] : 0;
        std::uint64_t hi = (bs && i >= ws + 1 && i - ws - 1 < nw) ? src.words_[i - ws - 1] : 0;
        return (bs ? (lo << bs) | (hi >> (64 - bs)) : lo);
    };
    // low part: bits [0, n) of src << k
    for (std::size_t i = 0; i < nw; ++i) {
        std::uint64_t w = word_shl(i);
        if (i + 1 == nw) w &= mask;
        words_[i] |= w;
    }
    // wrapped part: bits [n, n+k) of src << k land at [0, k)
    // equivalently src >> (n - k), truncated to k bits
    const std::uint32_t r = n_ - k;
    const unsigned rws = r >> 6, rbs = r & 63;
    const std::size_t kw = (static_cast<std::size_t>(k) + 63) / 64;
    for (std::size_t i = 0; i < kw; ++i) {
        std::uint64_t lo = (i + rws < nw) ? src.words_[i + rws] : 0;
        std::uint64_t hi = (rbs && i + rws + 1 < nw) ? src.words_[i + rws + 1] : 0;
        std::uint64_t w = rbs ? (lo >> rbs) | (hi << (64 - rbs)) : lo;
        if (i + 1 == kw) {
            unsigned kr = k & 63;
            if (kr) w &= (std::uint64_t{1} << kr) - 1;
        }
        words_[i] |= w;
    }
    if (!words_.empty()) words_.back() &= mask;
}

std::size_t ElementSet::hash() const {
    std::uint64_t h = 0x9E3779B97F4A7C15ULL ^ n_;
    for (auto w : words_) {
        h ^= w + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
}

} // namespace sumstruct
