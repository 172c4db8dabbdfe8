#include "suboplex/function_class.hpp"

#include <algorithm>
#include <unordered_set>

#include "suboplex/kernels.hpp"

namespace suboplex {

FunctionClass::FunctionClass(GroundSpec ground, std::vector<Subset> functions)
    : ground_(ground), functions_(std::move(functions)) {
    if (functions_.empty()) throw ValidationError("function class must be nonempty");
    for (Subset f : functions_) validate_subset(f, ground_);
    std::sort(functions_.begin(), functions_.end());
    if (std::adjacent_find(functions_.begin(), functions_.end()) != functions_.end()) {
        throw ValidationError("function class contains duplicate functions");
    }
}

bool FunctionClass::contains(Subset f) const { return std::binary_search(functions_.begin(), functions_.end(), f); }

FunctionClass class_from_poset(const SubsetPoset& p) {
    if (p.empty()) throw ValidationError("cannot build a function class from the empty poset");
    return FunctionClass(p.ground(), p.elements());
}

namespace {

bool shattered_brute(const FunctionClass& c, Subset u) {
    const int k = u.size();
    if (k >= 63 || c.size() < (std::size_t{1} << k)) return false;
    std::unordered_set<std::uint64_t> patterns;
    for (Subset f : c.functions()) patterns.insert((f & u).bits);
    return patterns.size() == (std::size_t{1} << k);
}

// Level-wise enumeration of shattered sets: a set is tested only if all of
// its one-smaller subsets were shattered.
template <typename Test, typename Visit>
void for_each_shattered(int n, Test&& test, Visit&& visit) {
    std::vector<Subset> level{Subset{}};
    visit(Subset{});
    while (!level.empty()) {
        std::unordered_set<Subset> known(level.begin(), level.end());
        std::vector<Subset> next;
        for (Subset s : level) {
            const int start = s.empty() ? 0 : 64 - std::countl_zero(s.bits);
            for (int i = start; i < n; ++i) {
                const Subset cand = s.with(i);
                bool all_subsets = true;
                for (int j = 0; j < i && all_subsets; ++j) {
                    if (cand.contains(j) && !known.contains(cand.without(j))) all_subsets = false;
                }
                if (all_subsets && test(cand)) {
                    next.push_back(cand);
                    visit(cand);
                }
            }
        }
        level = std::move(next);
    }
}

template <typename Visit>
void for_each_shattered(const FunctionClass& c, std::optional<ShatterMethod> method, Visit&& visit) {
    const SubsetPoset p = c.support_poset();
    const bool closed = is_intersection_closed(p);
    if (method == ShatterMethod::kClosure && !closed) {
        throw ValidationError("closure shattering test requires an intersection-closed class");
    }
    if (closed && method != ShatterMethod::kBrute) {
        for_each_shattered(c.ground().n(), [&](Subset u) { return is_shattered_by_closure(p, u); }, visit);
    } else {
        for_each_shattered(c.ground().n(), [&](Subset u) { return shattered_brute(c, u); }, visit);
    }
}

}  // namespace

bool is_shattered_by_closure(const SubsetPoset& p, Subset u) {
    bool ok = true;
    for_each_subset(u, [&](Subset a) {
        if (!ok) return;
        const auto cl = closure(p, a);
        if (!cl || !(*cl & (u - a)).empty()) ok = false;
    });
    return ok;
}

bool is_shattered(const FunctionClass& c, Subset u, ShatterMethod method) {
    validate_subset(u, c.ground());
    if (method == ShatterMethod::kBrute) return shattered_brute(c, u);
    const SubsetPoset p = c.support_poset();
    if (!is_intersection_closed(p)) {
        throw ValidationError("closure shattering test requires an intersection-closed class");
    }
    return is_shattered_by_closure(p, u);
}

int vc_dimension(const FunctionClass& c, std::optional<ShatterMethod> method) {
    int best = 0;
    for_each_shattered(c, method, [&](Subset u) { best = std::max(best, u.size()); });
    return best;
}

SimplicialComplex shatter_complex(const FunctionClass& c) {
    std::vector<Face> faces;
    for_each_shattered(c, std::nullopt, [&](Subset u) {
        Face f;
        for (int i = 0; i < c.ground().n(); ++i) {
            if (u.contains(i)) f.push_back(static_cast<std::uint32_t>(i));
        }
        faces.push_back(std::move(f));
    });
    return SimplicialComplex::from_faces(static_cast<std::size_t>(c.ground().n()), std::move(faces));
}

std::vector<PartialFunction> extentures(const FunctionClass& c) {
    const int n = c.ground().n();
    if (n > kMaxExtentureGround) {
        throw CapExceeded("extenture enumeration is capped at n = " + std::to_string(kMaxExtentureGround));
    }
    auto key = [](Subset domain, Subset ones) { return static_cast<std::uint32_t>((domain.bits << 16) | ones.bits); };

    std::vector<std::vector<Subset>> domains_by_size(static_cast<std::size_t>(n + 1));
    for (std::uint64_t d = 0; d < (std::uint64_t{1} << n); ++d) {
        domains_by_size[static_cast<std::size_t>(std::popcount(d))].push_back(Subset{d});
    }

    std::vector<PartialFunction> out;
    std::unordered_set<std::uint32_t> previous;  // realised (domain, pattern) pairs one level down
    for (int k = 0; k <= n; ++k) {
        std::unordered_set<std::uint32_t> current;
        for (Subset d : domains_by_size[static_cast<std::size_t>(k)]) {
            std::size_t distinct = 0;
            for (Subset f : c.functions()) distinct += current.insert(key(d, f & d)).second ? 1 : 0;
            if (distinct == (std::size_t{1} << k)) continue;
            for_each_subset(d, [&](Subset ones) {
                if (current.contains(key(d, ones))) return;
                for (int i = 0; i < n; ++i) {
                    if (d.contains(i) && !previous.contains(key(d.without(i), ones.without(i)))) return;
                }
                out.push_back(PartialFunction{ones, d - ones});
            });
        }
        previous = std::move(current);
    }
    return out;
}

Subset constant_coordinates(const FunctionClass& c) {
    std::uint64_t all_one = c.ground().full_mask();
    std::uint64_t all_zero = c.ground().full_mask();
    for (Subset f : c.functions()) {
        all_one &= f.bits;
        all_zero &= ~f.bits;
    }
    return Subset{all_one | all_zero};
}

namespace {

void sort_generators(std::vector<SquarefreeMonomial>& gens) {
    std::sort(gens.begin(), gens.end(), [](const SquarefreeMonomial& a, const SquarefreeMonomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a < b;
    });
}

}  // namespace

IdealGenerators suboplex_ideal(const FunctionClass& c) {
    const Subset constant = constant_coordinates(c);
    IdealGenerators out{c.ground(), {}};
    for (int i = 0; i < c.ground().n(); ++i) {
        if (!constant.contains(i)) out.generators.push_back({Subset::singleton(i), Subset::singleton(i)});
    }
    for (const PartialFunction& f : extentures(c)) out.generators.push_back({f.zeros, f.ones});
    sort_generators(out.generators);
    return out;
}

IdealGenerators dual_ideal(const FunctionClass& c) {
    IdealGenerators out{c.ground(), {}};
    for (Subset f : c.functions()) out.generators.push_back({f, complement(f, c.ground())});
    sort_generators(out.generators);
    return out;
}

bool collapse_membership(const IdealGenerators& suboplex_generators, Subset u) {
    // x(i,0)x(i,1) collapses to y_i^2, which divides no squarefree monomial;
    // every other generator collapses to the squarefree product over its support.
    std::vector<std::uint64_t> collapsed;
    for (const SquarefreeMonomial& g : suboplex_generators.generators) {
        if ((g.support0 & g.support1).empty()) collapsed.push_back((g.support0 | g.support1).bits);
    }
    return kernels::any_divides(collapsed, u.bits);
}

bool collapse_membership(const FunctionClass& c, Subset u) {
    validate_subset(u, c.ground());
    return collapse_membership(suboplex_ideal(c), u);
}

FunctionClass flip_class(const FunctionClass& c, Subset mask) {
    validate_subset(mask, c.ground());
    std::vector<Subset> flipped;
    flipped.reserve(c.size());
    for (Subset f : c.functions()) flipped.push_back(f ^ mask);
    return FunctionClass(c.ground(), std::move(flipped));
}

}  // namespace suboplex
