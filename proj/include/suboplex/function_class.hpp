#pragma once
// Boolean function classes on [n], identified with families of 1-preimages.

#include <optional>
#include <vector>

#include "suboplex/complex.hpp"
#include "suboplex/poset.hpp"
#include "suboplex/subsets.hpp"

namespace suboplex {

/// Largest ground set for which extentures are enumerated (3^n partial
/// functions in the worst case).
inline constexpr int kMaxExtentureGround = 16;

class FunctionClass {
public:
    /// Functions are stored sorted; duplicates and the empty class are rejected.
    FunctionClass(GroundSpec ground, std::vector<Subset> functions);

    const GroundSpec& ground() const noexcept { return ground_; }
    const std::vector<Subset>& functions() const noexcept { return functions_; }
    std::size_t size() const noexcept { return functions_.size(); }
    bool contains(Subset f) const;

    /// The support family as a poset under inclusion.
    SubsetPoset support_poset() const { return SubsetPoset(ground_, functions_); }

    friend bool operator==(const FunctionClass&, const FunctionClass&) = default;

private:
    GroundSpec ground_;
    std::vector<Subset> functions_;
};

/// Minimal squarefree generators in the ring on x(i,0), x(i,1), i in [n].
struct IdealGenerators {
    GroundSpec ground;
    std::vector<SquarefreeMonomial> generators;  // sorted, divisibility antichain
};

enum class ShatterMethod {
    kBrute,    // every restriction pattern on U occurs
    kClosure,  // closure criterion; needs an intersection-closed support family
};

FunctionClass class_from_poset(const SubsetPoset& p);

bool is_shattered(const FunctionClass& c, Subset u, ShatterMethod method);

/// Closure criterion against an already-built intersection-closed poset:
/// U is shattered iff closure(A) exists and misses U \ A for every A in U.
bool is_shattered_by_closure(const SubsetPoset& p, Subset u);

/// Level-wise search. Without a method, uses the closure criterion exactly
/// when the class is intersection-closed.
int vc_dimension(const FunctionClass& c, std::optional<ShatterMethod> method = std::nullopt);

/// All shattered sets, as a complex on [n].
SimplicialComplex shatter_complex(const FunctionClass& c);

/// Minimal partial functions extending to no member of the class, in order
/// of (domain size, domain, ones). Throws CapExceeded above n = 16.
std::vector<PartialFunction> extentures(const FunctionClass& c);

/// Points where every member takes the same value.
Subset constant_coordinates(const FunctionClass& c);

/// Functional monomials x(i,0)x(i,1) plus one monomial per extenture
/// (support1 = ones, support0 = zeros). A functional monomial divisible by a
/// degree-one extenture monomial (constant coordinate) is dropped so the
/// result stays minimal.
IdealGenerators suboplex_ideal(const FunctionClass& c);

/// One degree-n generator per member: support0 = f, support1 = [n] \ f.
IdealGenerators dual_ideal(const FunctionClass& c);

/// Whether prod_{i in U} y_i lies in the image of the suboplex ideal under
/// x(i,b) -> y_i.
bool collapse_membership(const FunctionClass& c, Subset u);

/// Same test against precomputed suboplex generators.
bool collapse_membership(const IdealGenerators& suboplex_generators, Subset u);

FunctionClass flip_class(const FunctionClass& c, Subset mask);

}  // namespace suboplex
