#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sumstruct/element_set.hpp"
#include "sumstruct/rng.hpp"

using sumstruct::ElementSet;

TEST_CASE("basic set algebra") {
    ElementSet s(10);
    CHECK(s.none());
    s.set(3);
    s.set(9);
    CHECK(s.count() == 2);
    CHECK(s.test(3));
    CHECK(!s.test(4));
    ElementSet t(10);
    t.set(4);
    t |= s;
    CHECK(t.count() == 3);
    t.subtract(s);
    CHECK(t.count() == 1);
    CHECK(t.test(4));
    CHECK(ElementSet::full(10).count() == 10);
    CHECK(ElementSet::full(70).count() == 70);
    CHECK(ElementSet::full(64).count() == 64);
}

TEST_CASE("member iteration and containment") {
    ElementSet s(130);
    for (std::uint32_t x : {0u, 63u, 64u, 65u, 129u}) s.set(x);
    CHECK(s.members() == std::vector<std::uint32_t>{0, 63, 64, 65, 129});
    CHECK(s.next_member(0) == 0);
    CHECK(s.next_member(1) == 63);
    CHECK(s.next_member(66) == 129);
    CHECK(s.next_member(130) == -1);
    ElementSet t(130);
    t.set(63);
    t.set(129);
    CHECK(s.contains_all(t));
    CHECK(!t.contains_all(s));
}

TEST_CASE("member-sequence comparison") {
    auto mk = [](std::initializer_list<std::uint32_t> xs) {
        ElementSet s(8);
        for (auto x : xs) s.set(x);
        return s;
    };
    // {1,2} before {1,3}: first differing index is 2, held by the left
    CHECK(ElementSet::compare_members(mk({1, 2}), mk({1, 3})) < 0);
    CHECK(ElementSet::compare_members(mk({1, 3}), mk({2, 3})) < 0);
    CHECK(ElementSet::compare_members(mk({1}), mk({1, 2})) < 0);
    CHECK(ElementSet::compare_members(mk({0, 5}), mk({0, 5})) == 0);
}

namespace {

// reference rotation: bit x -> bit (x + k) mod n
ElementSet rotate_reference(const ElementSet& src, std::uint32_t k) {
    ElementSet out(src.universe());
    for (auto x : src.members()) out.set((x + k) % src.universe());
    return out;
}

} // namespace

TEST_CASE("or_rotated matches the per-bit reference across word boundaries") {
    for (std::uint32_t n : {1u, 2u, 5u, 11u, 63u, 64u, 65u, 127u, 128u, 129u, 200u}) {
        for (std::uint64_t trial = 0; trial < 20; ++trial) {
            ElementSet src(n);
            for (std::uint32_t x = 0; x < n; ++x)
                if (sumstruct::rng_u01(7, n, trial * 1000 + x) < 0.3) src.set(x);
            for (std::uint32_t k = 0; k < n; ++k) {
                ElementSet got(n);
                got.or_rotated(src, k);
                CHECK(got == rotate_reference(src, k));
            }
        }
    }
}

TEST_CASE("or_rotated accumulates into existing bits") {
    ElementSet dst(100);
    dst.set(99);
    ElementSet src(100);
    src.set(0);
    src.set(50);
    dst.or_rotated(src, 60);
    CHECK(dst.test(99));
    CHECK(dst.test(60));
    CHECK(dst.test(10)); // 50 + 60 wraps
    CHECK(dst.count() == 3);
}
