#include <doctest.h>

#include <algorithm>
#include <bit>
#include <random>

#include "suboplex/betti.hpp"
#include "suboplex/builders.hpp"
#include "suboplex/oracles.hpp"
#include "support/random.hpp"

using namespace suboplex;

namespace {

Matroid sum_of_uniforms() { return Matroid::direct_sum({Matroid::uniform(1, 1), Matroid::uniform(2, 3)}); }
Matroid sum_matrix() { return Matroid::linear(2, {{1, 0, 0, 0}, {0, 1, 1, 0}, {0, 1, 0, 1}}); }
Matroid sum_graph() { return Matroid::graphic(4, {{2, 3}, {0, 1}, {1, 2}, {2, 0}}); }
Matroid k4() { return Matroid::graphic(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

std::vector<Subset> flats_of(const SubsetPoset& p) {
    std::vector<Subset> out;
    for (std::size_t i = 0; i < p.size(); ++i) out.push_back(p.element(i));
    return out;
}

// Flats by brute force: every closure of every subset.
std::vector<Subset> brute_flats(const Matroid& m) {
    std::vector<Subset> out;
    for_each_subset(Subset::full(m.ground()), [&](Subset a) {
        const Subset c = matroid_closure(m, a);
        if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    });
    std::sort(out.begin(), out.end(), [](Subset a, Subset b) {
        return a.size() != b.size() ? a.size() < b.size() : a.bits < b.bits;
    });
    return out;
}

bool basis(const Matroid& m, Subset b) {
    return b.size() == matroid_rank(m, b) && matroid_rank(m, b) == matroid_rank(m, Subset::full(m.ground()));
}

// A nonempty cube face with 2^k vertices has dimension k.
int cube_face_dimension(Subset face) { return face.empty() ? -1 : std::bit_width(std::uint64_t(face.size())) - 1; }

}  // namespace

TEST_CASE("rank examples") {
    CHECK(matroid_rank(Matroid::uniform(2, 3), Subset{0b111}) == 2);
    CHECK(matroid_rank(sum_matrix(), Subset{0b1111}) == 3);
    CHECK(matroid_rank(sum_graph(), Subset{0b1110}) == 2);
    CHECK(matroid_rank(sum_graph(), Subset{0b0001}) == 1);
    CHECK(matroid_rank(k4(), Subset{0b111111}) == 3);
    CHECK(matroid_rank(Matroid::linear(3, {{1, 1}, {1, 2}}), Subset{0b11}) == 2);
    CHECK(matroid_rank(Matroid::linear(3, {{1, 2}, {1, 2}}), Subset{0b11}) == 1);
    CHECK_THROWS_AS(matroid_rank(Matroid::uniform(2, 3), Subset{0b1000}), ValidationError);
    CHECK_THROWS_AS(Matroid::uniform(4, 3), ValidationError);
    CHECK_THROWS_AS(Matroid::linear(4, {{1}}), ValidationError);
    CHECK_THROWS_AS(Matroid::graphic(2, {{0, 2}}), ValidationError);
}

TEST_CASE("closure examples") {
    CHECK(matroid_closure(Matroid::uniform(2, 3), Subset{0b001}) == Subset{0b001});
    CHECK(matroid_closure(sum_of_uniforms(), Subset{0b0110}) == Subset{0b1110});
    CHECK(matroid_closure(sum_graph(), Subset{0b0110}) == Subset{0b1110});
    CHECK(is_flat(sum_of_uniforms(), Subset{0b1110}));
    CHECK_FALSE(is_flat(sum_of_uniforms(), Subset{0b0110}));
    const Matroid loopy = Matroid::direct_sum({Matroid::uniform(0, 1), Matroid::uniform(1, 2)});
    CHECK(matroid_closure(loopy, Subset{}) == Subset{0b001});
}

TEST_CASE("lattices of flats") {
    const SubsetPoset u23 = lattice_of_flats(Matroid::uniform(2, 3));
    CHECK(u23.size() == 5);
    CHECK(rank(u23) == 2);

    std::vector<std::vector<std::int64_t>> rows{{0, 1, 0, 1}, {0, 0, 1, 1}};
    const SubsetPoset plane = lattice_of_flats(Matroid::linear(2, rows));
    CHECK(plane.size() == 5);
    CHECK(plane.element(0) == Subset{0b0001});

    const SubsetPoset sum = lattice_of_flats(sum_of_uniforms());
    CHECK(sum.size() == 10);
    CHECK(flats_of(sum) == flats_of(lattice_of_flats(sum_matrix())));
    CHECK(flats_of(sum) == flats_of(lattice_of_flats(sum_graph())));
    CHECK(lattice_of_flats(k4()).size() == 15);
}

TEST_CASE("flats, closures and bases on assorted matroids") {
    std::vector<Matroid> all{sum_of_uniforms(), sum_matrix(), sum_graph(), k4()};
    for (int m = 1; m <= 6; ++m) {
        for (int k = 0; k <= std::min(3, m); ++k) all.push_back(Matroid::uniform(k, m));
    }
    all.push_back(Matroid::direct_sum({Matroid::uniform(0, 1), Matroid::uniform(2, 4)}));
    all.push_back(Matroid::linear(3, {{1, 0, 1, 1, 0}, {0, 1, 1, 2, 0}}));
    std::uint64_t seed = 0x5eed0801;
    for (const Matroid& m : all) {
        CHECK(check_rank_axioms(m, seed++, 300));
        const SubsetPoset p = lattice_of_flats(m);
        CHECK(flats_of(p) == brute_flats(m));
        CHECK(is_intersection_closed(p));
        CHECK(rank(p) == matroid_rank(m, Subset::full(m.ground())));
        const FunctionClass c = class_from_poset(p);
        for_each_subset(Subset::full(m.ground()), [&](Subset a) {
            CHECK(closure(p, a) == matroid_closure(m, a));
            if (basis(m, a)) CHECK(is_shattered(c, a, ShatterMethod::kBrute));
        });
    }
}

TEST_CASE("minors") {
    const Matroid m = sum_of_uniforms();
    const Matroid whole = matroid_minor(m, matroid_closure(m, Subset{}), Subset{0b1111});
    CHECK(flats_of(lattice_of_flats(whole)) == flats_of(lattice_of_flats(m)));

    const Matroid minor = matroid_minor(m, Subset{}, Subset{0b1110});
    CHECK(minor.size() == 3);
    const SubsetPoset lf = lattice_of_flats(minor);
    CHECK(flats_of(lf) == flats_of(lattice_of_flats(Matroid::uniform(2, 3))));
    CHECK(mobius(lf, lf.element(*bottom_index(lf)), lf.element(*top_index(lf))) == 2);

    CHECK_THROWS_AS(matroid_minor(m, Subset{}, Subset{0b0110}), ValidationError);
    CHECK_THROWS_AS(matroid_minor(m, Subset{0b0001}, Subset{0b1110}), ValidationError);

    // Every interval of the flat lattice is the flat lattice of a minor.
    const SubsetPoset p = lattice_of_flats(k4());
    for (auto [lo, hi] : std::vector<std::pair<std::size_t, std::size_t>>{{0, p.size() - 1}, {1, p.size() - 1}}) {
        const Subset f = p.element(lo);
        const Subset g = p.element(hi);
        const SubsetPoset interval_poset = interval(p, f, g, false);
        const SubsetPoset minor_flats = lattice_of_flats(matroid_minor(k4(), f, g));
        CHECK(interval_poset.size() == minor_flats.size());
        CHECK(mobius(interval_poset, f, g) == mobius(minor_flats, minor_flats.element(*bottom_index(minor_flats)),
                                                    minor_flats.element(*top_index(minor_flats))));
    }
}

TEST_CASE("face posets") {
    const SubsetPoset c1 = cube_complex(1);
    CHECK(c1.size() == 4);
    CHECK(c1.element(0) == Subset{});
    CHECK(cube_complex(2).size() == 10);
    CHECK(cube_complex(3).size() == 28);
    CHECK(cube_cells(4).faces.size() == 81);
    CHECK_THROWS_AS(cube_cells(0), ValidationError);
    CHECK_THROWS_AS(cube_cells(5), ValidationError);

    const SubsetPoset triangle = face_poset({3, {Subset{0b111}, Subset{0b011}, Subset{0b110}, Subset{0b101},
                                                 Subset{0b001}, Subset{0b010}, Subset{0b100}}});
    CHECK(triangle.size() == 8);
    CHECK(rank(triangle) == 3);

    // A segment alone never produces the empty face.
    const SubsetPoset segment = face_poset({2, {Subset{0b11}, Subset{0b01}}});
    CHECK(segment.size() == 2);
}

TEST_CASE("face poset Betti numbers follow face dimensions") {
    for (int d = 1; d <= 3; ++d) {
        const SubsetPoset p = cube_complex(d);
        const MobiusBetti mb = betti_via_mobius(p, gf2());
        CHECK(mb.table == betti_via_intervals(p, gf2()));
        for (const auto& [key, value] : mb.table.entries()) {
            CHECK(value == 1);
            const auto [a, b] = dictionary_pair(key.degree, p.ground());
            CHECK(key.i == cube_face_dimension(b) - cube_face_dimension(a));
        }
    }
}

TEST_CASE("formula classes") {
    const FormulaClass parity2 = formula_class({FormulaKind::kParityConj, 2, 0, false, {}});
    CHECK(parity2.poset.size() == 5);
    CHECK(parity2.cls.ground().n() == 4);
    CHECK(vc_dimension(parity2.cls) == 2);
    CHECK(homological_dimension(parity2.poset, gf2()) == 2);

    const FormulaClass poly21 = formula_class({FormulaKind::kPolyConj, 2, 1, false, {}});
    CHECK(vc_dimension(poly21.cls) == 3);
    CHECK(homological_dimension(poly21.poset, gf2()) == 3);

    const FormulaClass mono31 = formula_class({FormulaKind::kKcnf, 3, 1, true, {}});
    const int vc = vc_oracle(mono31.cls);
    const int hd = homological_dimension(mono31.poset, gf2());
    CHECK(3 <= vc);
    CHECK(vc <= hd);
    CHECK(hd <= 4);

    const FormulaClass general21 = formula_class({FormulaKind::kKcnf, 2, 1, false, {}});
    CHECK(general21.poset.size() == 10);
    CHECK(is_intersection_closed(general21.poset));
    CHECK(general21.poset.contains(Subset{0b1111}));
    CHECK(general21.poset.contains(Subset{}));

    const FormulaClass csp = formula_class({FormulaKind::kCsp, 2, 0, false, {Subset{0b0110}, Subset{0b1100}}});
    CHECK(csp.poset.size() == 4);
    CHECK(homological_dimension(csp.poset, gf2()) <= 2);

    CHECK_THROWS_AS(formula_class({FormulaKind::kKcnf, 5, 1, false, {}}), CapExceeded);
    CHECK_THROWS_AS(formula_class({FormulaKind::kCsp, 2, 0, false, {Subset{0b10000}}}), ValidationError);
}
