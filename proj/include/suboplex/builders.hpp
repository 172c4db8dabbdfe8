#pragma once
// Matroids and their flat lattices, polyhedral face posets, and classes of
// Boolean formulas on the cube {0,1}^d.

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "suboplex/function_class.hpp"
#include "suboplex/poset.hpp"
#include "suboplex/subsets.hpp"

namespace suboplex {

/// Largest matroid ground set for which flats are enumerated.
inline constexpr int kMaxFlatGround = 16;

/// Immutable matroid given by its rank oracle. Elements are 0 .. size()-1.
class Matroid {
public:
    /// U(k,m): rank min(|A|, k).
    static Matroid uniform(int k, int m);
    /// Column matroid of a matrix over GF(p), given as rows.
    static Matroid linear(std::uint32_t p, std::vector<std::vector<std::int64_t>> rows);
    /// Cycle matroid of a multigraph; edges are elements.
    static Matroid graphic(int vertices, std::vector<std::pair<int, int>> edges);
    /// Parts occupy consecutive element ranges in order.
    static Matroid direct_sum(std::vector<Matroid> parts);

    int size() const noexcept;
    GroundSpec ground() const { return GroundSpec(size()); }
    int rank(Subset a) const;

    struct Node;

private:
    explicit Matroid(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;

    friend Matroid matroid_minor(const Matroid& m, Subset f, Subset g);
};

int matroid_rank(const Matroid& m, Subset a);
/// {x : rk(A + x) = rk(A)}.
Subset matroid_closure(const Matroid& m, Subset a);
bool is_flat(const Matroid& m, Subset a);
/// All flats, grown level by level from cl(emptyset) by closing F + e.
SubsetPoset lattice_of_flats(const Matroid& m);
/// M|G/F on the elements of G \ F (in increasing order), with
/// rk(A) = rk_M(A + F) - rk_M(F). F and G must be flats with F in G.
Matroid matroid_minor(const Matroid& m, Subset f, Subset g);

/// Checks rank axioms on `trials` random triples (seeded).
bool check_rank_axioms(const Matroid& m, std::uint64_t seed, int trials);

/// Polyhedral complex given combinatorially by the vertex sets of its faces.
struct CellComplexInput {
    int vertices;
    std::vector<Subset> faces;
};

/// Intersection closure of the face family, ordered by inclusion.
SubsetPoset face_poset(const CellComplexInput& x);

/// The 3^d nonempty faces of [0,1]^d on vertices 0 .. 2^d - 1 (bit j of a
/// vertex is its j-th coordinate). 1 <= d <= 4.
CellComplexInput cube_cells(int d);
/// Face poset of the cube; the empty face arises as an intersection.
SubsetPoset cube_complex(int d);

enum class FormulaKind { kKcnf, kCsp, kParityConj, kPolyConj };

struct FormulaClassSpec {
    FormulaKind kind = FormulaKind::kKcnf;
    int d = 0;
    int k = 0;
    bool monotone = false;
    /// Generator functions for kCsp, as subsets of the 2^d points.
    std::vector<Subset> generators;
};

struct FormulaClass {
    FunctionClass cls;
    SubsetPoset poset;
};

/// Ground set is the cube {0,1}^d with point x at index sum_j x_j 2^j.
FormulaClass formula_class(const FormulaClassSpec& spec);

}  // namespace suboplex
