#pragma once
// Multigraded Betti numbers of dual ideals of intersection-closed posets,
// from interval homology or from the Moebius function, and the labeled
// order complex that supports the cellular resolution.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "suboplex/complex.hpp"
#include "suboplex/function_class.hpp"
#include "suboplex/linalg.hpp"
#include "suboplex/poset.hpp"
#include "suboplex/subsets.hpp"

namespace suboplex {

/// Order complex of P with each chain labeled by m(min, max); the empty
/// chain is labeled 1.
class LabeledComplex {
public:
    LabeledComplex(SubsetPoset poset, SimplicialComplex complex)
        : poset_(std::move(poset)), complex_(std::move(complex)) {}

    const SubsetPoset& poset() const noexcept { return poset_; }
    const SimplicialComplex& complex() const noexcept { return complex_; }
    SquarefreeMonomial label(const Face& chain) const;
    /// Distinct labels of nonempty chains, sorted.
    std::vector<SquarefreeMonomial> realized_labels() const;

private:
    SubsetPoset poset_;
    SimplicialComplex complex_;
};

/// Rejects posets that are not intersection-closed.
LabeledComplex cellular_resolution(const SubsetPoset& p);

/// Exhaustive acyclicity checks cover every squarefree degree; allowed up to
/// this ground size.
inline constexpr int kMaxExhaustiveAcyclicGround = 6;

/// For each label b (realized labels, or all 2^(2n) squarefree degrees when
/// `exhaustive`), the subcomplex of chains whose label divides b has
/// vanishing reduced homology. A subcomplex without vertices counts as the
/// null complex.
bool verify_acyclic(const LabeledComplex& l, const FieldSpec& field, bool exhaustive = false);

struct BettiKey {
    int i;
    SquarefreeMonomial degree;
};

/// Orders by homological index, then total degree, then supports.
struct BettiKeyLess {
    bool operator()(const BettiKey& a, const BettiKey& b) const;
};

class BettiTable {
public:
    using Entries = std::map<BettiKey, std::uint64_t, BettiKeyLess>;

    explicit BettiTable(GroundSpec ground) : ground_(ground) {}

    const GroundSpec& ground() const noexcept { return ground_; }
    const Entries& entries() const noexcept { return entries_; }
    bool empty() const noexcept { return entries_.empty(); }

    /// Adds `value` to the entry; zero values are ignored.
    void add(int i, const SquarefreeMonomial& degree, std::uint64_t value);
    std::uint64_t at(int i, const SquarefreeMonomial& degree) const;

    /// Largest i with a nonzero entry; -1 for the zero table.
    int projective_dimension() const;
    /// Sum over all multidegrees, per homological index 0 .. pd.
    std::vector<std::uint64_t> totals() const;
    /// Coarsened to (i, total degree).
    std::map<std::pair<int, int>, std::uint64_t> graded() const;

    friend bool operator==(const BettiTable& a, const BettiTable& b) {
        return a.ground_ == b.ground_ && a.entries_.size() == b.entries_.size() &&
               std::equal(a.entries_.begin(), a.entries_.end(), b.entries_.begin(), [](const auto& x, const auto& y) {
                   return x.first.i == y.first.i && x.first.degree == y.first.degree && x.second == y.second;
               });
    }

private:
    GroundSpec ground_;
    Entries entries_;
};

/// Macaulay2-style block: header of indices, a "total:" row, then one row per
/// r listing beta_{i,i+r}, zeros as ".". Ends with a newline.
std::string render_m2(const BettiTable& t);

/// "m(A,B)" for dictionary monomials, the variable product otherwise.
std::string degree_label(const SquarefreeMonomial& m, const GroundSpec& g);

/// Human-readable mismatches between two tables; empty when equal.
std::vector<std::string> table_diff(const BettiTable& a, const BettiTable& b);

struct IntervalOptions {
    unsigned threads = 1;
};

/// beta_{0,m(A,A)} = 1 and beta_{i,m(A,B)} = dim H~_{i-2} of the truncated
/// order complex of [A,B]. Rejects posets that are not intersection-closed.
BettiTable betti_via_intervals(const SubsetPoset& p, const FieldSpec& field, IntervalOptions options = {});

struct MobiusBetti {
    BettiTable table;
    /// False when the interval Cohen-Macaulay check was skipped; callers
    /// should surface a warning in that case.
    bool verified;
};

/// |mu(A,B)| placed at i = rank([A,B]). Unless `assume_interval_cm`, checks
/// the poset over `field` first and throws ValidationError if it fails.
MobiusBetti betti_via_mobius(const SubsetPoset& p, const FieldSpec& field, bool assume_interval_cm = false);

/// Projective dimension of the dual ideal of an intersection-closed poset.
/// Intervals are visited by decreasing rank, stopping once no remaining
/// interval can raise the maximum.
int homological_dimension(const SubsetPoset& p, const FieldSpec& field);

/// Through the poset when the support family is intersection-closed, through
/// the oracle otherwise.
int homological_dimension(const FunctionClass& c, const FieldSpec& field);

}  // namespace suboplex
