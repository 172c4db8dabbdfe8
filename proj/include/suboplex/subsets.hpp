#pragma once
// Ground-set subsets, partial Boolean functions and the squarefree monomials
// in the 2n variables x(i,0), x(i,1) that encode them.

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include "suboplex/error.hpp"

namespace suboplex {

inline constexpr int kMaxGround = 64;

/// Size of the ground set [n] = {0, ..., n-1}; 1 <= n <= 64.
class GroundSpec {
public:
    explicit GroundSpec(int n);

    int n() const noexcept { return n_; }
    /// Bit mask with the low n bits set.
    std::uint64_t full_mask() const noexcept {
        return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    }

    friend bool operator==(const GroundSpec&, const GroundSpec&) = default;

private:
    int n_;
};

/// A subset of [n] stored as a 64-bit vector. Carries no ground size; the
/// owning container validates that only the low n bits are set.
struct Subset {
    std::uint64_t bits = 0;

    constexpr Subset() = default;
    constexpr explicit Subset(std::uint64_t b) : bits(b) {}

    static constexpr Subset singleton(int i) { return Subset{std::uint64_t{1} << i}; }
    static Subset full(const GroundSpec& g) { return Subset{g.full_mask()}; }

    constexpr bool contains(int i) const { return (bits >> i) & 1U; }
    constexpr bool empty() const { return bits == 0; }
    constexpr int size() const { return std::popcount(bits); }
    constexpr bool subset_of(Subset other) const { return (bits & ~other.bits) == 0; }
    constexpr bool proper_subset_of(Subset other) const {
        return subset_of(other) && bits != other.bits;
    }
    constexpr Subset with(int i) const { return Subset{bits | (std::uint64_t{1} << i)}; }
    constexpr Subset without(int i) const { return Subset{bits & ~(std::uint64_t{1} << i)}; }

    friend constexpr Subset operator&(Subset a, Subset b) { return Subset{a.bits & b.bits}; }
    friend constexpr Subset operator|(Subset a, Subset b) { return Subset{a.bits | b.bits}; }
    friend constexpr Subset operator^(Subset a, Subset b) { return Subset{a.bits ^ b.bits}; }
    /// Set difference a \ b.
    friend constexpr Subset operator-(Subset a, Subset b) { return Subset{a.bits & ~b.bits}; }
    friend constexpr auto operator<=>(Subset, Subset) = default;
};

/// Complement within [n].
inline Subset complement(Subset s, const GroundSpec& g) { return Subset{~s.bits & g.full_mask()}; }

/// Throws ValidationError if bits outside [n] are set.
void validate_subset(Subset s, const GroundSpec& g);

/// Length-n string over {0,1}; character i is membership of element i.
std::string to_bitstring(Subset s, const GroundSpec& g);
Subset parse_bitstring(std::string_view text, const GroundSpec& g);

/// Calls `fn` for every subset of `set`, in increasing numeric order of bits.
template <typename Fn>
void for_each_subset(Subset set, Fn&& fn) {
    std::uint64_t sub = 0;
    while (true) {
        fn(Subset{sub});
        if (sub == set.bits) break;
        sub = (sub - set.bits) & set.bits;
    }
}

/// A partial function on [n]: `ones` maps to 1, `zeros` maps to 0.
struct PartialFunction {
    Subset ones;
    Subset zeros;

    Subset domain() const { return ones | zeros; }
    bool is_total(const GroundSpec& g) const { return domain() == Subset::full(g); }

    friend auto operator<=>(const PartialFunction&, const PartialFunction&) = default;
};

/// Length-n string over {0,1,*}; '*' marks points outside the domain.
std::string to_pattern(const PartialFunction& f, const GroundSpec& g);

/// Squarefree monomial in x(i,0), x(i,1): support0 holds the i with x(i,0)
/// present, support1 those with x(i,1) present.
struct SquarefreeMonomial {
    Subset support0;
    Subset support1;

    int degree() const { return support0.size() + support1.size(); }
    /// True iff every i in [n] contributes x(i,0) or x(i,1), i.e. the
    /// monomial is m(A,B) for a unique pair A <= B.
    bool covers_ground(const GroundSpec& g) const { return (support0 | support1) == Subset::full(g); }

    friend auto operator<=>(const SquarefreeMonomial&, const SquarefreeMonomial&) = default;
};

/// delta(A,B): ones = A, zeros = [n] \ B. Requires A subset of B.
PartialFunction delta(Subset a, Subset b, const GroundSpec& g);

/// m(A,B): support0 = B, support1 = [n] \ A; degree n + |B \ A|.
SquarefreeMonomial monomial(Subset a, Subset b, const GroundSpec& g);

/// Inverse of `monomial` on dictionary monomials: returns (A, B).
std::pair<Subset, Subset> dictionary_pair(const SquarefreeMonomial& m, const GroundSpec& g);

inline bool divides(const SquarefreeMonomial& m1, const SquarefreeMonomial& m2) {
    return m1.support0.subset_of(m2.support0) && m1.support1.subset_of(m2.support1);
}

inline SquarefreeMonomial lcm(const SquarefreeMonomial& m1, const SquarefreeMonomial& m2) {
    return {m1.support0 | m2.support0, m1.support1 | m2.support1};
}

/// Pointwise agreement of two partial functions.
inline PartialFunction intersect(const PartialFunction& f, const PartialFunction& g) {
    return {f.ones & g.ones, f.zeros & g.zeros};
}

/// Sorted product "x0_0*x0_1*x2_1"; the unit monomial renders as "1".
std::string to_string(const SquarefreeMonomial& m, const GroundSpec& g);

/// Dictionary label "m(A,B)" with A, B as bitstrings. Requires covers_ground.
std::string dictionary_label(const SquarefreeMonomial& m, const GroundSpec& g);

}  // namespace suboplex

template <>
struct std::hash<suboplex::Subset> {
    std::size_t operator()(suboplex::Subset s) const noexcept { return std::hash<std::uint64_t>{}(s.bits); }
};
