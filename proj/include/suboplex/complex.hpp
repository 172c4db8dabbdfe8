#pragma once
// Simplicial complexes, order complexes of subset posets, and reduced
// homology over a prime field or Q.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "suboplex/linalg.hpp"
#include "suboplex/poset.hpp"

namespace suboplex {

/// A face is a strictly increasing list of vertex ids.
using Face = std::vector<std::uint32_t>;

/// Dimension reported by the null complex (no faces at all).
inline constexpr int kNullDimension = -2;

/// Downward-closed family of faces, stored per dimension in lexicographic
/// order. The null complex (no faces) and the empty complex {emptyset}
/// (a single face, the empty set) are distinct values.
class SimplicialComplex {
public:
    static SimplicialComplex null_complex(std::size_t vertex_count);
    static SimplicialComplex empty_complex(std::size_t vertex_count);
    /// All subsets of the given faces. Throws on vertex ids out of range.
    static SimplicialComplex from_facets(std::size_t vertex_count, std::vector<Face> facets);
    /// The given faces must already be closed under taking subsets; the
    /// empty face is implied when the list is nonempty.
    static SimplicialComplex from_faces(std::size_t vertex_count, std::vector<Face> faces);

    std::size_t vertex_count() const noexcept { return vertex_count_; }
    bool is_null() const noexcept { return by_dim_.empty(); }
    /// Top face dimension; -1 for {emptyset}, kNullDimension for the null complex.
    int dimension() const noexcept { return static_cast<int>(by_dim_.size()) - 2; }

    /// Faces of dimension `dim` (dim >= -1), lexicographically sorted.
    const std::vector<Face>& faces(int dim) const;
    std::size_t face_count(int dim) const;
    std::size_t total_face_count() const;
    bool contains(const Face& face) const;
    /// Position of `face` within faces(face.size() - 1), or -1.
    std::ptrdiff_t face_index(const Face& face) const;
    /// Faces not contained in a larger face, sorted by (size, lex).
    std::vector<Face> facets() const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    SimplicialComplex(std::size_t vertex_count, std::vector<std::vector<Face>> by_dim)
        : vertex_count_(vertex_count), by_dim_(std::move(by_dim)) {}

    std::size_t vertex_count_;
    std::vector<std::vector<Face>> by_dim_;  // by_dim_[k + 1] holds the k-faces
};

/// dim H~_k for k = -1 .. dim. Empty for the null complex.
class HomologyProfile {
public:
    HomologyProfile() = default;
    explicit HomologyProfile(std::vector<std::size_t> dims) : dims_(std::move(dims)) {}

    /// dim H~_k; zero outside the stored range.
    std::size_t operator[](int k) const {
        const int idx = k + 1;
        return idx < 0 || idx >= static_cast<int>(dims_.size()) ? 0 : dims_[static_cast<std::size_t>(idx)];
    }
    int top_degree() const noexcept { return static_cast<int>(dims_.size()) - 2; }
    bool is_acyclic() const;
    /// Sum of (-1)^k dim H~_k.
    std::int64_t euler_characteristic() const;
    /// "H~[-1..d] = [a, b, ...]"; the null complex prints "H~[] = []".
    std::string to_string() const;

    friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;

private:
    std::vector<std::size_t> dims_;
};

/// Matrix of the boundary map from k-faces to (k-1)-faces, k >= 0; the
/// augmentation for k = 0. Sign (-1)^j for removing the j-th vertex.
SparseMatrix boundary_matrix(const SimplicialComplex& k, int dim);

HomologyProfile reduced_homology(const SimplicialComplex& k, const FieldSpec& field);

/// Sum over i >= -1 of (-1)^i f_i, with f_{-1} = 1 for any nonnull complex.
std::int64_t reduced_euler_characteristic(const SimplicialComplex& k);

/// {G in K : G and F disjoint, G union F in K}. Throws unless F is a face.
SimplicialComplex link(const SimplicialComplex& k, const Face& f);

/// Reisner's criterion: every link (including that of the empty face) has
/// vanishing reduced homology below its dimension.
bool is_cohen_macaulay(const SimplicialComplex& k, const FieldSpec& field);

/// Chains of the sub-poset on `members` (indices into p, sorted). Vertex j
/// of the result is members[j].
SimplicialComplex order_complex_on(const SubsetPoset& p, std::span<const std::size_t> members);

SimplicialComplex order_complex(const SubsetPoset& p);

/// Truncated order complex of the closed interval [lo,hi] (indices):
/// rank >= 2 gives the order complex of the open interval, rank 1 the empty
/// complex, rank 0 the null complex.
SimplicialComplex truncated_order_complex(const SubsetPoset& p, std::size_t lo, std::size_t hi);

/// Same for a bounded poset given as a whole (e.g. an interval built with
/// `interval`). Throws if the poset lacks a unique bottom or top.
SimplicialComplex truncated_order_complex(const SubsetPoset& bounded);

/// Every open interval of p has a Cohen-Macaulay order complex.
bool is_interval_cm(const SubsetPoset& p, const FieldSpec& field);

}  // namespace suboplex
