#include "suboplex/builders.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <variant>

#include "suboplex/linalg.hpp"

namespace suboplex {

struct UniformNode {
    int k;
    int m;
};
struct LinearNode {
    std::uint32_t p;
    std::size_t rows;
    std::vector<std::vector<std::uint32_t>> columns;  // entries reduced mod p
};
struct GraphicNode {
    int vertices;
    std::vector<std::pair<int, int>> edges;
};
struct SumNode {
    std::vector<Matroid> parts;
    std::vector<int> offsets;
    int size;
};
struct MinorNode {
    Matroid base;
    Subset contracted;
    std::vector<int> elements;  // base element for each minor element
};

struct Matroid::Node {
    std::variant<UniformNode, LinearNode, GraphicNode, SumNode, MinorNode> body;
};

namespace {

int linear_rank(const LinearNode& node, Subset a) {
    const std::uint64_t p = node.p;
    std::vector<std::vector<std::uint64_t>> cols;
    for (std::size_t j = 0; j < node.columns.size(); ++j) {
        if (a.contains(static_cast<int>(j))) cols.emplace_back(node.columns[j].begin(), node.columns[j].end());
    }
    auto inverse = [p](std::uint64_t x) {
        std::uint64_t result = 1;
        std::uint64_t base = x % p;
        for (std::uint64_t e = p - 2; e > 0; e >>= 1) {
            if (e & 1U) result = result * base % p;
            base = base * base % p;
        }
        return result;
    };
    int r = 0;
    std::size_t row = 0;
    for (; row < node.rows && static_cast<std::size_t>(r) < cols.size(); ++row) {
        std::size_t pivot = static_cast<std::size_t>(r);
        while (pivot < cols.size() && cols[pivot][row] == 0) ++pivot;
        if (pivot == cols.size()) continue;
        std::swap(cols[pivot], cols[static_cast<std::size_t>(r)]);
        const auto& pc = cols[static_cast<std::size_t>(r)];
        const std::uint64_t inv = inverse(pc[row]);
        for (std::size_t c = static_cast<std::size_t>(r) + 1; c < cols.size(); ++c) {
            const std::uint64_t factor = cols[c][row] * inv % p;
            if (factor == 0) continue;
            for (std::size_t i = row; i < node.rows; ++i) cols[c][i] = (cols[c][i] + (p - factor) * pc[i]) % p;
        }
        ++r;
    }
    return r;
}

int graphic_rank(const GraphicNode& node, Subset a) {
    std::vector<int> parent(static_cast<std::size_t>(node.vertices));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    int r = 0;
    for (std::size_t e = 0; e < node.edges.size(); ++e) {
        if (!a.contains(static_cast<int>(e))) continue;
        const int u = find(node.edges[e].first);
        const int v = find(node.edges[e].second);
        if (u != v) {
            parent[static_cast<std::size_t>(u)] = v;
            ++r;
        }
    }
    return r;
}

void check_element_count(int m) {
    if (m < 1 || m > kMaxGround) {
        throw ValidationError("matroid ground size must be in 1.." + std::to_string(kMaxGround) + ", got " +
                              std::to_string(m));
    }
}

}  // namespace

Matroid Matroid::uniform(int k, int m) {
    check_element_count(m);
    if (k < 0 || k > m) throw ValidationError("uniform matroid needs 0 <= k <= m");
    return Matroid(std::make_shared<Node>(Node{UniformNode{k, m}}));
}

Matroid Matroid::linear(std::uint32_t p, std::vector<std::vector<std::int64_t>> rows) {
    if (!is_prime(p) || p >= (1U << 31)) throw ValidationError("linear matroid field size must be a prime below 2^31");
    if (rows.empty() || rows.front().empty()) throw ValidationError("linear matroid needs a nonempty matrix");
    const std::size_t cols = rows.front().size();
    check_element_count(static_cast<int>(cols));
    LinearNode node{p, rows.size(), std::vector<std::vector<std::uint32_t>>(cols)};
    for (const auto& row : rows) {
        if (row.size() != cols) throw ValidationError("linear matroid matrix rows have different lengths");
        for (std::size_t j = 0; j < cols; ++j) {
            const std::int64_t v = row[j] % static_cast<std::int64_t>(p);
            node.columns[j].push_back(static_cast<std::uint32_t>(v < 0 ? v + p : v));
        }
    }
    return Matroid(std::make_shared<Node>(Node{std::move(node)}));
}

Matroid Matroid::graphic(int vertices, std::vector<std::pair<int, int>> edges) {
    if (vertices < 1) throw ValidationError("graphic matroid needs at least one vertex");
    check_element_count(static_cast<int>(edges.size()));
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= vertices || v >= vertices) {
            throw ValidationError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") has a vertex out of range");
        }
    }
    return Matroid(std::make_shared<Node>(Node{GraphicNode{vertices, std::move(edges)}}));
}

Matroid Matroid::direct_sum(std::vector<Matroid> parts) {
    if (parts.empty()) throw ValidationError("direct sum needs at least one part");
    SumNode node{std::move(parts), {}, 0};
    for (const Matroid& part : node.parts) {
        node.offsets.push_back(node.size);
        node.size += part.size();
    }
    check_element_count(node.size);
    return Matroid(std::make_shared<Node>(Node{std::move(node)}));
}

int Matroid::size() const noexcept {
    return std::visit(
        [](const auto& n) -> int {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, UniformNode>) return n.m;
            if constexpr (std::is_same_v<T, LinearNode>) return static_cast<int>(n.columns.size());
            if constexpr (std::is_same_v<T, GraphicNode>) return static_cast<int>(n.edges.size());
            if constexpr (std::is_same_v<T, SumNode>) return n.size;
            if constexpr (std::is_same_v<T, MinorNode>) return static_cast<int>(n.elements.size());
        },
        node_->body);
}

int Matroid::rank(Subset a) const {
    validate_subset(a, ground());
    return std::visit(
        [a](const auto& n) -> int {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, UniformNode>) return std::min(a.size(), n.k);
            if constexpr (std::is_same_v<T, LinearNode>) return linear_rank(n, a);
            if constexpr (std::is_same_v<T, GraphicNode>) return graphic_rank(n, a);
            if constexpr (std::is_same_v<T, SumNode>) {
                int total = 0;
                for (std::size_t k = 0; k < n.parts.size(); ++k) {
                    const int width = n.parts[k].size();
                    const std::uint64_t mask = width == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
                    total += n.parts[k].rank(Subset{(a.bits >> n.offsets[k]) & mask});
                }
                return total;
            }
            if constexpr (std::is_same_v<T, MinorNode>) {
                Subset lifted = n.contracted;
                for (std::size_t e = 0; e < n.elements.size(); ++e) {
                    if (a.contains(static_cast<int>(e))) lifted = lifted.with(n.elements[e]);
                }
                return n.base.rank(lifted) - n.base.rank(n.contracted);
            }
        },
        node_->body);
}

int matroid_rank(const Matroid& m, Subset a) { return m.rank(a); }

Subset matroid_closure(const Matroid& m, Subset a) {
    const int r = m.rank(a);
    Subset out = a;
    for (int x = 0; x < m.size(); ++x) {
        if (!a.contains(x) && m.rank(a.with(x)) == r) out = out.with(x);
    }
    return out;
}

bool is_flat(const Matroid& m, Subset a) { return matroid_closure(m, a) == a; }

SubsetPoset lattice_of_flats(const Matroid& m) {
    if (m.size() > kMaxFlatGround) {
        throw CapExceeded("flat enumeration is capped at " + std::to_string(kMaxFlatGround) + " elements");
    }
    std::set<std::uint64_t> all;
    std::vector<Subset> level{matroid_closure(m, Subset{})};
    all.insert(level.front().bits);
    while (!level.empty()) {
        std::set<std::uint64_t> next;
        for (Subset f : level) {
            for (int e = 0; e < m.size(); ++e) {
                if (f.contains(e)) continue;
                const Subset g = matroid_closure(m, f.with(e));
                if (!all.contains(g.bits)) next.insert(g.bits);
            }
        }
        level.clear();
        for (std::uint64_t bits : next) {
            all.insert(bits);
            level.push_back(Subset{bits});
        }
    }
    std::vector<Subset> flats;
    for (std::uint64_t bits : all) flats.push_back(Subset{bits});
    return SubsetPoset(m.ground(), std::move(flats));
}

Matroid matroid_minor(const Matroid& m, Subset f, Subset g) {
    validate_subset(f, m.ground());
    validate_subset(g, m.ground());
    if (!f.subset_of(g)) throw ValidationError("minor requires F contained in G");
    if (!is_flat(m, f) || !is_flat(m, g)) throw ValidationError("minor endpoints must be flats");
    if (f == g) throw ValidationError("minor M|G/F with F = G has an empty ground set");
    MinorNode node{m, f, {}};
    for (int e = 0; e < m.size(); ++e) {
        if (g.contains(e) && !f.contains(e)) node.elements.push_back(e);
    }
    return Matroid(std::make_shared<Matroid::Node>(Matroid::Node{std::move(node)}));
}

bool check_rank_axioms(const Matroid& m, std::uint64_t seed, int trials) {
    std::mt19937_64 rng(seed);
    const std::uint64_t full = m.ground().full_mask();
    for (int t = 0; t < trials; ++t) {
        const Subset a{rng() & full};
        const Subset b{rng() & full};
        const Subset c{rng() & full};
        const int ra = m.rank(a);
        const int rb = m.rank(b);
        if (ra < 0 || ra > a.size()) return false;
        if (m.rank(a | c) < ra) return false;
        if (m.rank(a | b) + m.rank(a & b) > ra + rb) return false;
    }
    return true;
}

SubsetPoset face_poset(const CellComplexInput& x) {
    const GroundSpec ground(x.vertices);
    if (x.faces.empty()) throw ValidationError("cell complex needs at least one face");
    for (Subset f : x.faces) validate_subset(f, ground);
    return SubsetPoset(ground, intersection_closure(x.faces));
}

CellComplexInput cube_cells(int d) {
    if (d < 1 || d > 4) throw ValidationError("cube dimension must be in 1..4");
    const int points = 1 << d;
    CellComplexInput out{points, {}};
    int assignments = 1;
    for (int j = 0; j < d; ++j) assignments *= 3;
    for (int code = 0; code < assignments; ++code) {
        Subset face;
        for (int v = 0; v < points; ++v) {
            bool inside = true;
            int rest = code;
            for (int j = 0; j < d && inside; ++j, rest /= 3) {
                const int want = rest % 3;  // 0, 1, or 2 for a free coordinate
                if (want != 2 && ((v >> j) & 1) != want) inside = false;
            }
            if (inside) face = face.with(v);
        }
        out.faces.push_back(face);
    }
    return out;
}

SubsetPoset cube_complex(int d) { return face_poset(cube_cells(d)); }

namespace {

FormulaClass from_family(GroundSpec ground, std::vector<Subset> family) {
    SubsetPoset poset(ground, intersection_closure(std::move(family)));
    FunctionClass cls = class_from_poset(poset);
    return {std::move(cls), std::move(poset)};
}

FormulaClass from_matroid(const Matroid& m) {
    SubsetPoset poset = lattice_of_flats(m);
    FunctionClass cls = class_from_poset(poset);
    return {std::move(cls), std::move(poset)};
}

}  // namespace

FormulaClass formula_class(const FormulaClassSpec& spec) {
    if (spec.d < 1 || spec.d > 4) throw CapExceeded("formula classes need 1 <= d <= 4 (ground size 2^d <= 16)");
    const int d = spec.d;
    const int points = 1 << d;
    const GroundSpec ground(points);
    switch (spec.kind) {
        case FormulaKind::kKcnf: {
            if (spec.k < 0 || spec.k > d) throw ValidationError("k-CNF needs 0 <= k <= d");
            std::vector<Subset> family{Subset::full(ground)};
            for (std::uint32_t vars = 0; vars < (1U << d); ++vars) {
                if (std::popcount(vars) > spec.k) continue;
                // Negated literals range over subsets of the clause's variables.
                for_each_subset(Subset{spec.monotone ? 0 : vars}, [&](Subset negated) {
                    Subset support;
                    for (int x = 0; x < points; ++x) {
                        const std::uint64_t literal_values = (static_cast<std::uint64_t>(x) ^ negated.bits) & vars;
                        if (literal_values != 0) support = support.with(x);
                    }
                    family.push_back(support);
                });
            }
            return from_family(ground, std::move(family));
        }
        case FormulaKind::kCsp: {
            std::vector<Subset> family{Subset::full(ground)};
            for (Subset g : spec.generators) {
                validate_subset(g, ground);
                family.push_back(g);
            }
            return from_family(ground, std::move(family));
        }
        case FormulaKind::kParityConj: {
            std::vector<std::vector<std::int64_t>> rows(static_cast<std::size_t>(d));
            for (int j = 0; j < d; ++j) {
                for (int x = 0; x < points; ++x) rows[static_cast<std::size_t>(j)].push_back((x >> j) & 1);
            }
            return from_matroid(Matroid::linear(2, std::move(rows)));
        }
        case FormulaKind::kPolyConj: {
            if (spec.k < 0 || spec.k > d) throw ValidationError("polynomial degree must satisfy 0 <= k <= d");
            std::vector<std::vector<std::int64_t>> rows;
            for (int size = 0; size <= spec.k; ++size) {
                for (int u = 0; u < (1 << d); ++u) {
                    if (std::popcount(static_cast<unsigned>(u)) != size) continue;
                    std::vector<std::int64_t> row;
                    for (int x = 0; x < points; ++x) row.push_back((x & u) == u ? 1 : 0);
                    rows.push_back(std::move(row));
                }
            }
            return from_matroid(Matroid::linear(2, std::move(rows)));
        }
    }
    throw ValidationError("unknown formula kind");
}

}  // namespace suboplex
