#include <doctest.h>

#include <random>

#include "suboplex/poset.hpp"
#include "support/random.hpp"

using namespace suboplex;

namespace {

SubsetPoset poset_of(int n, std::initializer_list<const char*> elements) {
    const GroundSpec g(n);
    std::vector<Subset> e;
    for (const char* s : elements) e.push_back(parse_bitstring(s, g));
    return SubsetPoset(g, std::move(e));
}

SubsetPoset sum_lattice() {
    return poset_of(4, {"0000", "1000", "0100", "0010", "0001", "1100", "1010", "1001", "0111", "1111"});
}

Subset bits(const char* s, const SubsetPoset& p) { return parse_bitstring(s, p.ground()); }

}  // namespace

TEST_CASE("elements are stored in a linear extension") {
    const SubsetPoset p = poset_of(3, {"111", "000", "010", "110"});
    CHECK(to_bitstring(p.element(0), p.ground()) == "000");
    CHECK(to_bitstring(p.element(3), p.ground()) == "111");
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(p.less(i, j));
    }
    CHECK_THROWS_AS(poset_of(3, {"000", "000"}), ValidationError);
    CHECK_THROWS_AS(p.require_index(bits("100", p)), ValidationError);
}

TEST_CASE("worked matroid lattice: covers, rank, Moebius") {
    const SubsetPoset p = sum_lattice();
    CHECK(p.size() == 10);
    CHECK(cover_relations(p).size() == 17);
    CHECK(rank(p) == 3);
    CHECK(is_intersection_closed(p));
    CHECK(mobius(p, bits("0000", p), bits("0111", p)) == 2);
    CHECK(mobius(p, bits("0000", p), bits("1111", p)) == -2);
    CHECK(mobius(p, bits("1000", p), bits("1111", p)) == 2);
    CHECK(mobius(p, bits("0000", p), bits("1000", p)) == -1);
    CHECK(bottom_index(p) == std::size_t{0});
    CHECK(top_index(p) == std::size_t{9});
    CHECK(interval_rank(p, 0, 9) == 3);
    CHECK(interval_rank(p, 0, *p.index_of(bits("0111", p))) == 2);
    CHECK_THROWS_AS(mobius(p, bits("1000", p), bits("0111", p)), ValidationError);
}

TEST_CASE("closure in the worked lattice") {
    const SubsetPoset p = sum_lattice();
    CHECK(closure(p, bits("0110", p)) == bits("0111", p));
    CHECK(closure(p, bits("1100", p)) == bits("1100", p));
    CHECK(closure(p, bits("1110", p)) == bits("1111", p));
    CHECK(closure(p, Subset{}) == Subset{});
    const SubsetPoset no_top = poset_of(2, {"00", "10", "01"});
    CHECK_FALSE(closure(no_top, bits("11", no_top)).has_value());
}

TEST_CASE("non-bounded poset and intervals") {
    const SubsetPoset p = poset_of(4, {"0000", "1000", "1100", "0010", "0011"});
    CHECK_FALSE(top_index(p).has_value());
    CHECK(bottom_index(p) == std::size_t{0});
    CHECK(rank(p) == 2);
    const SubsetPoset closed = interval(p, bits("0000", p), bits("1100", p), false);
    CHECK(closed.size() == 3);
    const SubsetPoset open = interval(p, bits("0000", p), bits("1100", p), true);
    CHECK(open.size() == 1);
    CHECK_THROWS_AS(interval(p, bits("1000", p), bits("0011", p), false), ValidationError);
    CHECK_THROWS_AS(rank(SubsetPoset(GroundSpec(2), {})), ValidationError);
}

TEST_CASE("intersection closedness") {
    CHECK_FALSE(is_intersection_closed(poset_of(3, {"110", "011"})));
    CHECK(is_intersection_closed(poset_of(3, {"110", "011", "010"})));
    const auto family = intersection_closure({Subset{0b110}, Subset{0b011}, Subset{0b101}});
    CHECK(family.size() == 7);
}

TEST_CASE("Moebius recurrence on random posets") {
    std::mt19937_64 rng(0x5eed0301);
    for (int trial = 0; trial < 150; ++trial) {
        const SubsetPoset p = testing::random_closed_poset(rng, 6, 8);
        for (std::size_t a = 0; a < p.size(); ++a) {
            CHECK(p.mobius_index(a, a) == 1);
            for (std::size_t b = a + 1; b < p.size(); ++b) {
                if (!p.less(a, b)) continue;
                std::int64_t sum = 0;
                for (std::size_t c : p.interval_indices(a, b, false)) sum += p.mobius_index(a, c);
                CHECK(sum == 0);
            }
        }
    }
}

TEST_CASE("closure operator laws on random closed posets") {
    std::mt19937_64 rng(0x5eed0302);
    for (int trial = 0; trial < 150; ++trial) {
        const SubsetPoset p = testing::random_closed_poset(rng, 7, 8);
        REQUIRE(is_intersection_closed(p));
        const int n = p.ground().n();
        for (int k = 0; k < 30; ++k) {
            const Subset a = testing::random_subset(rng, n);
            const Subset b = a & testing::random_subset(rng, n);
            const auto ca = closure(p, a);
            const auto cb = closure(p, b);
            if (!ca) continue;
            CHECK(a.subset_of(*ca));
            CHECK(p.contains(*ca));
            CHECK(closure(p, *ca) == ca);
            REQUIRE(cb.has_value());
            CHECK(cb->subset_of(*ca));
        }
    }
}

TEST_CASE("heights and interval ranks agree with covers") {
    std::mt19937_64 rng(0x5eed0303);
    for (int trial = 0; trial < 100; ++trial) {
        const SubsetPoset p = testing::random_closed_poset(rng, 6, 8);
        for (auto [lo, hi] : p.cover_indices()) {
            CHECK(p.interval_indices(lo, hi, true).empty());
            CHECK(interval_rank(p, lo, hi) == 1);
        }
        const std::size_t bottom = *bottom_index(p);
        for (std::size_t j = 0; j < p.size(); ++j) CHECK(interval_rank(p, bottom, j) == p.height(j));
    }
}
