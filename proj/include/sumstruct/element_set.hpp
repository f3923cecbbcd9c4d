#pragma once

#include <cstdint>
#include <vector>

namespace sumstruct {

/// Fixed-universe bitset over element indices [0, n). The workhorse
/// representation for subsets of a group and for sumset closures.
class ElementSet {
public:
    ElementSet() = default;
    explicit ElementSet(std::uint32_t universe);

    static ElementSet full(std::uint32_t universe);

    std::uint32_t universe() const { return n_; }

    bool test(std::uint32_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::uint32_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::uint32_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    void clear();

    std::uint32_t count() const;
    bool none() const;
    bool is_full() const { return count() == n_; }

    ElementSet& operator|=(const ElementSet& o);
    ElementSet& operator&=(const ElementSet& o);
    ElementSet& subtract(const ElementSet& o); // this \ o

    bool operator==(const ElementSet& o) const { return n_ == o.n_ && words_ == o.words_; }
    bool operator!=(const ElementSet& o) const { return !(*this == o); }

    bool contains_all(const ElementSet& o) const; // o subset of this

    /// -1 if no member >= from.
    std::int64_t next_member(std::uint32_t from) const;
    std::vector<std::uint32_t> members() const;

    /// Order by member sequence: the first index where membership differs
    /// decides, and the set containing it comes first. Used for
    /// deterministic witness tie-breaking.
    static int compare_members(const ElementSet& a, const ElementSet& b);

    /// this |= rotl(src, k) within the n-bit window. The cyclic-group fast
    /// path for shift-by-element.
    void or_rotated(const ElementSet& src, std::uint32_t k);

    std::size_t hash() const;

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    std::uint32_t n_ = 0;
    std::vector<std::uint64_t> words_;

    std::uint64_t tail_mask() const {
        unsigned r = n_ & 63;
        return r ? ((std::uint64_t{1} << r) - 1) : ~std::uint64_t{0};
    }
};

struct ElementSetHash {
    std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

} // namespace sumstruct
