#include "suboplex/complex.hpp"

#include <algorithm>
#include <sstream>

namespace suboplex {
namespace {

void sort_unique(std::vector<Face>& faces) {
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
}

void check_face(const Face& f, std::size_t vertex_count) {
    for (std::size_t k = 0; k < f.size(); ++k) {
        if (f[k] >= vertex_count) throw ValidationError("face vertex " + std::to_string(f[k]) + " out of range");
        if (k > 0 && f[k - 1] >= f[k]) throw ValidationError("face vertices must be strictly increasing");
    }
}

Face without_position(const Face& f, std::size_t j) {
    Face out;
    out.reserve(f.size() - 1);
    for (std::size_t k = 0; k < f.size(); ++k) {
        if (k != j) out.push_back(f[k]);
    }
    return out;
}

}  // namespace

SimplicialComplex SimplicialComplex::null_complex(std::size_t vertex_count) { return {vertex_count, {}}; }

SimplicialComplex SimplicialComplex::empty_complex(std::size_t vertex_count) {
    return {vertex_count, {std::vector<Face>{Face{}}}};
}

SimplicialComplex SimplicialComplex::from_facets(std::size_t vertex_count, std::vector<Face> facets) {
    if (facets.empty()) return null_complex(vertex_count);
    std::vector<std::vector<Face>> by_dim;
    for (Face& f : facets) {
        std::sort(f.begin(), f.end());
        check_face(f, vertex_count);
        if (f.size() > 30) throw CapExceeded("facet with more than 30 vertices");
        if (by_dim.size() < f.size() + 1) by_dim.resize(f.size() + 1);
        const std::uint32_t count = 1U << f.size();
        for (std::uint32_t mask = 0; mask < count; ++mask) {
            Face sub;
            for (std::size_t k = 0; k < f.size(); ++k) {
                if (mask & (1U << k)) sub.push_back(f[k]);
            }
            by_dim[sub.size()].push_back(std::move(sub));
        }
    }
    for (auto& level : by_dim) sort_unique(level);
    return {vertex_count, std::move(by_dim)};
}

SimplicialComplex SimplicialComplex::from_faces(std::size_t vertex_count, std::vector<Face> faces) {
    if (faces.empty()) return null_complex(vertex_count);
    std::vector<std::vector<Face>> by_dim(1, std::vector<Face>{Face{}});
    for (Face& f : faces) {
        check_face(f, vertex_count);
        if (by_dim.size() < f.size() + 1) by_dim.resize(f.size() + 1);
        by_dim[f.size()].push_back(std::move(f));
    }
    for (auto& level : by_dim) sort_unique(level);
    SimplicialComplex out(vertex_count, std::move(by_dim));
    for (std::size_t d = 1; d < out.by_dim_.size(); ++d) {
        if (out.by_dim_[d].empty()) throw ValidationError("face family skips a dimension; not closed under subsets");
        for (const Face& f : out.by_dim_[d]) {
            for (std::size_t j = 0; j < f.size(); ++j) {
                if (!std::binary_search(out.by_dim_[d - 1].begin(), out.by_dim_[d - 1].end(), without_position(f, j))) {
                    throw ValidationError("face family is not closed under taking subsets");
                }
            }
        }
    }
    return out;
}

const std::vector<Face>& SimplicialComplex::faces(int dim) const {
    static const std::vector<Face> kNone;
    const int idx = dim + 1;
    if (idx < 0 || idx >= static_cast<int>(by_dim_.size())) return kNone;
    return by_dim_[static_cast<std::size_t>(idx)];
}

std::size_t SimplicialComplex::face_count(int dim) const { return faces(dim).size(); }

std::size_t SimplicialComplex::total_face_count() const {
    std::size_t total = 0;
    for (const auto& level : by_dim_) total += level.size();
    return total;
}

std::ptrdiff_t SimplicialComplex::face_index(const Face& face) const {
    const auto& level = faces(static_cast<int>(face.size()) - 1);
    auto it = std::lower_bound(level.begin(), level.end(), face);
    if (it == level.end() || *it != face) return -1;
    return it - level.begin();
}

bool SimplicialComplex::contains(const Face& face) const { return face_index(face) >= 0; }

std::vector<Face> SimplicialComplex::facets() const {
    std::vector<Face> out;
    for (std::size_t d = 0; d < by_dim_.size(); ++d) {
        std::vector<char> covered(by_dim_[d].size(), 0);
        if (d + 1 < by_dim_.size()) {
            for (const Face& g : by_dim_[d + 1]) {
                for (std::size_t j = 0; j < g.size(); ++j) {
                    const auto idx = face_index(without_position(g, j));
                    if (idx >= 0) covered[static_cast<std::size_t>(idx)] = 1;
                }
            }
        }
        for (std::size_t k = 0; k < by_dim_[d].size(); ++k) {
            if (!covered[k]) out.push_back(by_dim_[d][k]);
        }
    }
    return out;
}

bool HomologyProfile::is_acyclic() const {
    return std::all_of(dims_.begin(), dims_.end(), [](std::size_t v) { return v == 0; });
}

std::int64_t HomologyProfile::euler_characteristic() const {
    std::int64_t chi = 0;
    for (std::size_t idx = 0; idx < dims_.size(); ++idx) {
        const int k = static_cast<int>(idx) - 1;
        chi += (k % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(dims_[idx]);
    }
    return chi;
}

std::string HomologyProfile::to_string() const {
    if (dims_.empty()) return "H~[] = []";
    std::ostringstream out;
    out << "H~[-1.." << top_degree() << "] = [";
    for (std::size_t idx = 0; idx < dims_.size(); ++idx) out << (idx ? ", " : "") << dims_[idx];
    out << "]";
    return out.str();
}

SparseMatrix boundary_matrix(const SimplicialComplex& k, int dim) {
    const auto& cols = k.faces(dim);
    const auto& rows = k.faces(dim - 1);
    SparseMatrix m(rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const Face& f = cols[c];
        SparseMatrix::Column entries;
        entries.reserve(f.size());
        for (std::size_t j = 0; j < f.size(); ++j) {
            const Face facet = without_position(f, j);
            auto it = std::lower_bound(rows.begin(), rows.end(), facet);
            entries.emplace_back(static_cast<std::uint32_t>(it - rows.begin()), j % 2 == 0 ? 1 : -1);
        }
        m.set_column(c, std::move(entries));
    }
    return m;
}

HomologyProfile reduced_homology(const SimplicialComplex& k, const FieldSpec& field) {
    if (k.is_null()) return HomologyProfile{};
    const int top = k.dimension();
    // ranks[d] = rank of the boundary from d-faces, d = 0 .. top + 1.
    std::vector<std::size_t> ranks(static_cast<std::size_t>(top + 2), 0);
    for (int d = 0; d <= top; ++d) ranks[static_cast<std::size_t>(d)] = rank(boundary_matrix(k, d), field);
    std::vector<std::size_t> dims;
    dims.reserve(static_cast<std::size_t>(top + 2));
    for (int d = -1; d <= top; ++d) {
        const std::size_t in = d >= 0 ? ranks[static_cast<std::size_t>(d)] : 0;
        const std::size_t out = ranks[static_cast<std::size_t>(d + 1)];
        dims.push_back(k.face_count(d) - in - out);
    }
    return HomologyProfile(std::move(dims));
}

std::int64_t reduced_euler_characteristic(const SimplicialComplex& k) {
    std::int64_t chi = 0;
    for (int d = -1; d <= k.dimension(); ++d) {
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(k.face_count(d));
    }
    return chi;
}

SimplicialComplex link(const SimplicialComplex& k, const Face& f) {
    if (!k.contains(f)) throw ValidationError("link requires a face of the complex");
    std::vector<Face> faces;
    for (int d = 0; d <= k.dimension(); ++d) {
        for (const Face& g : k.faces(d)) {
            Face united;
            united.reserve(f.size() + g.size());
            std::set_union(f.begin(), f.end(), g.begin(), g.end(), std::back_inserter(united));
            if (united.size() != f.size() + g.size()) continue;  // not disjoint
            if (k.contains(united)) faces.push_back(g);
        }
    }
    if (faces.empty()) return SimplicialComplex::empty_complex(k.vertex_count());
    return SimplicialComplex::from_faces(k.vertex_count(), std::move(faces));
}

bool is_cohen_macaulay(const SimplicialComplex& k, const FieldSpec& field) {
    for (int d = -1; d <= k.dimension(); ++d) {
        for (const Face& f : k.faces(d)) {
            const SimplicialComplex lk = link(k, f);
            const HomologyProfile h = reduced_homology(lk, field);
            for (int i = -1; i < lk.dimension(); ++i) {
                if (h[i] != 0) return false;
            }
        }
    }
    return true;
}

SimplicialComplex order_complex_on(const SubsetPoset& p, std::span<const std::size_t> members) {
    const std::size_t m = members.size();
    if (m == 0) return SimplicialComplex::empty_complex(0);
    std::vector<std::vector<std::uint32_t>> up(m);
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = a + 1; b < m; ++b) {
            if (p.less(members[a], members[b])) up[a].push_back(static_cast<std::uint32_t>(b));
        }
    }
    std::vector<Face> chains;
    Face current;
    // Depth-first extension of chains upward; positions increase along a
    // chain, so every chain is emitted already sorted.
    auto extend = [&](auto& self, std::uint32_t last) -> void {
        chains.push_back(current);
        for (std::uint32_t next : up[last]) {
            current.push_back(next);
            self(self, next);
            current.pop_back();
        }
    };
    for (std::uint32_t a = 0; a < m; ++a) {
        current.assign(1, a);
        extend(extend, a);
    }
    return SimplicialComplex::from_faces(m, std::move(chains));
}

SimplicialComplex order_complex(const SubsetPoset& p) {
    if (p.empty()) return SimplicialComplex::empty_complex(0);
    std::vector<std::size_t> all(p.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return order_complex_on(p, all);
}

SimplicialComplex truncated_order_complex(const SubsetPoset& p, std::size_t lo, std::size_t hi) {
    if (!p.leq(lo, hi)) throw ValidationError("truncated order complex requires lo <= hi");
    if (lo == hi) return SimplicialComplex::null_complex(0);
    const std::vector<std::size_t> inner = p.interval_indices(lo, hi, /*open=*/true);
    if (inner.empty()) return SimplicialComplex::empty_complex(0);
    return order_complex_on(p, inner);
}

SimplicialComplex truncated_order_complex(const SubsetPoset& bounded) {
    const auto lo = bottom_index(bounded);
    const auto hi = top_index(bounded);
    if (!lo || !hi) throw ValidationError("truncated order complex requires a bounded poset");
    return truncated_order_complex(bounded, *lo, *hi);
}

bool is_interval_cm(const SubsetPoset& p, const FieldSpec& field) {
    for (std::size_t lo = 0; lo < p.size(); ++lo) {
        for (std::size_t hi = lo + 1; hi < p.size(); ++hi) {
            if (!p.less(lo, hi)) continue;
            if (!is_cohen_macaulay(truncated_order_complex(p, lo, hi), field)) return false;
        }
    }
    return true;
}

}  // namespace suboplex
