#include "suboplex/oracles.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

#include "suboplex/kernels.hpp"

namespace suboplex {

MonomialIdeal::MonomialIdeal(const IdealGenerators& gens) : variables_(2 * gens.ground.n()) {
    for (const SquarefreeMonomial& g : gens.generators) generators_.push_back(flatten(g, gens.ground.n()));
}

bool MonomialIdeal::contains(std::uint64_t monomial) const { return kernels::any_divides(generators_, monomial); }

std::uint64_t MonomialIdeal::flatten(const SquarefreeMonomial& m, int n) {
    std::uint64_t flat = 0;
    for (int i = 0; i < n; ++i) {
        if (m.support0.contains(i)) flat |= std::uint64_t{1} << (2 * i);
        if (m.support1.contains(i)) flat |= std::uint64_t{1} << (2 * i + 1);
    }
    return flat;
}

SquarefreeMonomial MonomialIdeal::unflatten(std::uint64_t flat, int n) {
    SquarefreeMonomial m;
    for (int i = 0; i < n; ++i) {
        if ((flat >> (2 * i)) & 1U) m.support0 = m.support0.with(i);
        if ((flat >> (2 * i + 1)) & 1U) m.support1 = m.support1.with(i);
    }
    return m;
}

BettiTable betti_oracle(const IdealGenerators& gens, const FieldSpec& field) {
    const int n = gens.ground.n();
    if (2 * n > kOracleMaxVariables) {
        throw CapExceeded("Betti oracle is capped at " + std::to_string(kOracleMaxVariables) + " variables, got " +
                          std::to_string(2 * n));
    }
    const MonomialIdeal ideal(gens);
    const std::uint64_t count = std::uint64_t{1} << ideal.variables();
    std::vector<char> member(count);
    for (std::uint64_t b = 0; b < count; ++b) member[b] = ideal.contains(b) ? 1 : 0;

    BettiTable table(gens.ground);
    for (std::uint64_t b = 0; b < count; ++b) {
        if (!member[b]) continue;  // K^b has no faces at all
        std::vector<std::uint32_t> vars;
        for (int v = 0; v < ideal.variables(); ++v) {
            if ((b >> v) & 1U) vars.push_back(static_cast<std::uint32_t>(v));
        }
        std::vector<Face> faces;
        const std::uint32_t local_count = 1U << vars.size();
        for (std::uint32_t tau = 1; tau < local_count; ++tau) {
            std::uint64_t removed = 0;
            Face face;
            for (std::size_t k = 0; k < vars.size(); ++k) {
                if (tau & (1U << k)) {
                    removed |= std::uint64_t{1} << vars[k];
                    face.push_back(static_cast<std::uint32_t>(k));
                }
            }
            if (member[b & ~removed]) faces.push_back(std::move(face));
        }
        const SimplicialComplex kb = faces.empty() ? SimplicialComplex::empty_complex(vars.size())
                                                   : SimplicialComplex::from_faces(vars.size(), std::move(faces));
        const HomologyProfile h = reduced_homology(kb, field);
        const SquarefreeMonomial degree = MonomialIdeal::unflatten(b, n);
        for (int d = -1; d <= h.top_degree(); ++d) table.add(d + 1, degree, h[d]);
    }
    return table;
}

int regularity_oracle(const IdealGenerators& gens, const FieldSpec& field) {
    const BettiTable table = betti_oracle(gens, field);
    if (table.empty()) throw ValidationError("regularity of the zero ideal is undefined");
    int reg = std::numeric_limits<int>::min();
    for (const auto& [key, value] : table.entries()) reg = std::max(reg, key.degree.degree() - key.i);
    return reg;
}

int vc_oracle(const FunctionClass& c) {
    const int n = c.ground().n();
    if (n > kVcOracleMaxGround) {
        throw CapExceeded("VC oracle is capped at n = " + std::to_string(kVcOracleMaxGround));
    }
    int best = 0;
    for (std::uint64_t u = 0; u < (std::uint64_t{1} << n); ++u) {
        const int k = std::popcount(u);
        if (k <= best) continue;
        std::unordered_set<std::uint64_t> patterns;
        for (Subset f : c.functions()) patterns.insert(f.bits & u);
        if (patterns.size() == (std::uint64_t{1} << k)) best = k;
    }
    return best;
}

}  // namespace suboplex
