#pragma once
// Brute-force reference computations. These build their complexes directly
// from ideal membership and share no construction code with the poset
// routines.

#include <cstdint>
#include <vector>

#include "suboplex/betti.hpp"
#include "suboplex/function_class.hpp"
#include "suboplex/linalg.hpp"

namespace suboplex {

/// Variable cap for the Betti oracle (2^12 multidegrees).
inline constexpr int kOracleMaxVariables = 12;
/// Ground-size cap for the exhaustive VC oracle.
inline constexpr int kVcOracleMaxGround = 20;

/// Squarefree ideal over the 2n variables x(i,b), flattened to bit 2i+b.
class MonomialIdeal {
public:
    explicit MonomialIdeal(const IdealGenerators& gens);

    int variables() const noexcept { return variables_; }
    const std::vector<std::uint64_t>& generators() const noexcept { return generators_; }
    bool contains(std::uint64_t monomial) const;

    static std::uint64_t flatten(const SquarefreeMonomial& m, int n);
    static SquarefreeMonomial unflatten(std::uint64_t flat, int n);

private:
    int variables_;
    std::vector<std::uint64_t> generators_;
};

/// beta_{i,b} = dim H~_{i-1}(K^b) over every squarefree b, where
/// K^b = { tau in supp(b) : b / tau lies in the ideal }.
/// Throws CapExceeded above kOracleMaxVariables variables.
BettiTable betti_oracle(const IdealGenerators& gens, const FieldSpec& field);

/// max over Betti entries of (degree - i). Throws ValidationError for the
/// zero ideal.
int regularity_oracle(const IdealGenerators& gens, const FieldSpec& field);

/// Largest U with all 2^|U| restriction patterns present, checking every
/// subset of [n] with no pruning.
int vc_oracle(const FunctionClass& c);

}  // namespace suboplex
