#include "suboplex/betti.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>
#include <thread>

#include "suboplex/oracles.hpp"

namespace suboplex {
namespace {

void require_intersection_closed(const SubsetPoset& p, const char* what) {
    if (p.empty()) throw ValidationError(std::string(what) + " requires a nonempty poset");
    if (!is_intersection_closed(p)) throw ValidationError(std::string(what) + " requires an intersection-closed poset");
}

// Longest chain length from `lo` to each element above it (-1 if incomparable).
std::vector<int> ranks_from(const SubsetPoset& p, std::size_t lo) {
    std::vector<int> longest(p.size(), -1);
    longest[lo] = 0;
    for (std::size_t j = lo + 1; j < p.size(); ++j) {
        if (!p.less(lo, j)) continue;
        int best = -1;
        for (std::size_t k = lo; k < j; ++k) {
            if (longest[k] >= 0 && p.less(k, j)) best = std::max(best, longest[k] + 1);
        }
        longest[j] = best;
    }
    return longest;
}

}  // namespace

SquarefreeMonomial LabeledComplex::label(const Face& chain) const {
    if (chain.empty()) return {};
    return monomial(poset_.element(chain.front()), poset_.element(chain.back()), poset_.ground());
}

std::vector<SquarefreeMonomial> LabeledComplex::realized_labels() const {
    std::set<SquarefreeMonomial> labels;
    for (int d = 0; d <= complex_.dimension(); ++d) {
        for (const Face& f : complex_.faces(d)) labels.insert(label(f));
    }
    return {labels.begin(), labels.end()};
}

LabeledComplex cellular_resolution(const SubsetPoset& p) {
    require_intersection_closed(p, "cellular resolution");
    return LabeledComplex(p, order_complex(p));
}

bool verify_acyclic(const LabeledComplex& l, const FieldSpec& field, bool exhaustive) {
    const SubsetPoset& p = l.poset();
    const int n = p.ground().n();
    // A chain label divides b iff every vertex label does, so each
    // subcomplex is induced on the vertices whose labels divide b.
    std::vector<SquarefreeMonomial> vertex_labels;
    for (std::size_t v = 0; v < p.size(); ++v) vertex_labels.push_back(l.label(Face{static_cast<std::uint32_t>(v)}));

    std::set<std::vector<std::size_t>> seen;
    auto check = [&](const SquarefreeMonomial& b) {
        std::vector<std::size_t> members;
        for (std::size_t v = 0; v < p.size(); ++v) {
            if (divides(vertex_labels[v], b)) members.push_back(v);
        }
        if (members.empty() || !seen.insert(members).second) return true;
        return reduced_homology(order_complex_on(p, members), field).is_acyclic();
    };

    if (!exhaustive) {
        for (const SquarefreeMonomial& b : l.realized_labels()) {
            if (!check(b)) return false;
        }
        return true;
    }
    if (n > kMaxExhaustiveAcyclicGround) {
        throw CapExceeded("exhaustive acyclicity check is capped at n = " + std::to_string(kMaxExhaustiveAcyclicGround));
    }
    const std::uint64_t full = p.ground().full_mask();
    for (std::uint64_t s0 = 0; s0 <= full; ++s0) {
        for (std::uint64_t s1 = 0; s1 <= full; ++s1) {
            if (!check({Subset{s0}, Subset{s1}})) return false;
        }
    }
    return true;
}

bool BettiKeyLess::operator()(const BettiKey& a, const BettiKey& b) const {
    if (a.i != b.i) return a.i < b.i;
    const int da = a.degree.degree();
    const int db = b.degree.degree();
    if (da != db) return da < db;
    return a.degree < b.degree;
}

void BettiTable::add(int i, const SquarefreeMonomial& degree, std::uint64_t value) {
    if (value == 0) return;
    entries_[BettiKey{i, degree}] += value;
}

std::uint64_t BettiTable::at(int i, const SquarefreeMonomial& degree) const {
    auto it = entries_.find(BettiKey{i, degree});
    return it == entries_.end() ? 0 : it->second;
}

int BettiTable::projective_dimension() const { return entries_.empty() ? -1 : entries_.rbegin()->first.i; }

std::vector<std::uint64_t> BettiTable::totals() const {
    std::vector<std::uint64_t> out(static_cast<std::size_t>(projective_dimension() + 1), 0);
    for (const auto& [key, value] : entries_) out[static_cast<std::size_t>(key.i)] += value;
    return out;
}

std::map<std::pair<int, int>, std::uint64_t> BettiTable::graded() const {
    std::map<std::pair<int, int>, std::uint64_t> out;
    for (const auto& [key, value] : entries_) out[{key.i, key.degree.degree()}] += value;
    return out;
}

std::string render_m2(const BettiTable& t) {
    if (t.empty()) return "total:\n";
    const int pd = t.projective_dimension();
    const auto graded = t.graded();
    const auto totals = t.totals();
    int r_min = std::numeric_limits<int>::max();
    int r_max = std::numeric_limits<int>::min();
    for (const auto& [key, value] : graded) {
        r_min = std::min(r_min, key.second - key.first);
        r_max = std::max(r_max, key.second - key.first);
    }

    std::vector<std::string> labels{"", "total:"};
    std::vector<std::vector<std::string>> cells(2);
    for (int i = 0; i <= pd; ++i) {
        cells[0].push_back(std::to_string(i));
        cells[1].push_back(std::to_string(totals[static_cast<std::size_t>(i)]));
    }
    for (int r = r_min; r <= r_max; ++r) {
        labels.push_back(std::to_string(r) + ":");
        std::vector<std::string> row;
        for (int i = 0; i <= pd; ++i) {
            auto it = graded.find({i, i + r});
            row.push_back(it == graded.end() ? "." : std::to_string(it->second));
        }
        cells.push_back(std::move(row));
    }

    std::size_t label_width = 0;
    for (const auto& s : labels) label_width = std::max(label_width, s.size());
    std::vector<std::size_t> widths(static_cast<std::size_t>(pd + 1), 0);
    for (const auto& row : cells) {
        for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
    }

    std::ostringstream out;
    for (std::size_t r = 0; r < cells.size(); ++r) {
        out << std::string(label_width - labels[r].size(), ' ') << labels[r];
        for (std::size_t c = 0; c < cells[r].size(); ++c) {
            out << ' ' << std::string(widths[c] - cells[r][c].size(), ' ') << cells[r][c];
        }
        out << '\n';
    }
    return out.str();
}

std::string degree_label(const SquarefreeMonomial& m, const GroundSpec& g) {
    return m.covers_ground(g) ? dictionary_label(m, g) : to_string(m, g);
}

std::vector<std::string> table_diff(const BettiTable& a, const BettiTable& b) {
    std::vector<std::string> out;
    if (!(a.ground() == b.ground())) {
        out.push_back("ground sizes differ: " + std::to_string(a.ground().n()) + " vs " + std::to_string(b.ground().n()));
        return out;
    }
    std::map<BettiKey, std::pair<std::uint64_t, std::uint64_t>, BettiKeyLess> merged;
    for (const auto& [key, value] : a.entries()) merged[key].first = value;
    for (const auto& [key, value] : b.entries()) merged[key].second = value;
    for (const auto& [key, values] : merged) {
        if (values.first == values.second) continue;
        out.push_back("beta_" + std::to_string(key.i) + " at " + degree_label(key.degree, a.ground()) + ": " +
                      std::to_string(values.first) + " vs " + std::to_string(values.second));
    }
    return out;
}

BettiTable betti_via_intervals(const SubsetPoset& p, const FieldSpec& field, IntervalOptions options) {
    require_intersection_closed(p, "Betti numbers via intervals");
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t lo = 0; lo < p.size(); ++lo) {
        for (std::size_t hi = lo + 1; hi < p.size(); ++hi) {
            if (p.less(lo, hi)) pairs.emplace_back(lo, hi);
        }
    }

    std::vector<HomologyProfile> results(pairs.size());
    auto work = [&](std::size_t start, std::size_t stride) {
        for (std::size_t k = start; k < pairs.size(); k += stride) {
            results[k] = reduced_homology(truncated_order_complex(p, pairs[k].first, pairs[k].second), field);
        }
    };
    const std::size_t threads = std::max<std::size_t>(1, std::min<std::size_t>(options.threads, pairs.size()));
    if (threads == 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
        for (auto& th : pool) th.join();
    }

    BettiTable table(p.ground());
    for (Subset a : p.elements()) table.add(0, monomial(a, a, p.ground()), 1);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        const auto& h = results[k];
        const SquarefreeMonomial m = monomial(p.element(pairs[k].first), p.element(pairs[k].second), p.ground());
        for (int d = -1; d <= h.top_degree(); ++d) table.add(d + 2, m, h[d]);
    }
    return table;
}

MobiusBetti betti_via_mobius(const SubsetPoset& p, const FieldSpec& field, bool assume_interval_cm) {
    require_intersection_closed(p, "Betti numbers via the Moebius function");
    if (!assume_interval_cm && !is_interval_cm(p, field)) {
        throw ValidationError("poset is not interval Cohen-Macaulay over " + field.to_string() +
                              "; Moebius values do not determine its Betti numbers");
    }
    BettiTable table(p.ground());
    for (std::size_t lo = 0; lo < p.size(); ++lo) {
        const std::vector<int> ranks = ranks_from(p, lo);
        for (std::size_t hi = lo; hi < p.size(); ++hi) {
            if (ranks[hi] < 0) continue;
            const std::int64_t mu = p.mobius_index(lo, hi);
            table.add(ranks[hi], monomial(p.element(lo), p.element(hi), p.ground()),
                      static_cast<std::uint64_t>(mu < 0 ? -mu : mu));
        }
    }
    return {std::move(table), !assume_interval_cm};
}

int homological_dimension(const SubsetPoset& p, const FieldSpec& field) {
    require_intersection_closed(p, "homological dimension");
    struct Candidate {
        int rank;
        std::size_t lo;
        std::size_t hi;
    };
    std::vector<Candidate> candidates;
    for (std::size_t lo = 0; lo < p.size(); ++lo) {
        const std::vector<int> ranks = ranks_from(p, lo);
        for (std::size_t hi = lo + 1; hi < p.size(); ++hi) {
            if (ranks[hi] > 0) candidates.push_back({ranks[hi], lo, hi});
        }
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Candidate& a, const Candidate& b) { return a.rank > b.rank; });

    // beta_i at [A,B] needs H~_{i-2} of a complex of dimension rank - 2.
    int best = 0;
    for (const Candidate& c : candidates) {
        if (c.rank <= best) break;
        const HomologyProfile h = reduced_homology(truncated_order_complex(p, c.lo, c.hi), field);
        for (int d = h.top_degree(); d >= -1; --d) {
            if (h[d] != 0) {
                best = std::max(best, d + 2);
                break;
            }
        }
    }
    return best;
}

int homological_dimension(const FunctionClass& c, const FieldSpec& field) {
    const SubsetPoset p = c.support_poset();
    if (is_intersection_closed(p)) return homological_dimension(p, field);
    return betti_oracle(dual_ideal(c), field).projective_dimension();
}

}  // namespace suboplex
