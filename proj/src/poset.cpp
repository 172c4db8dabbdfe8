#include "suboplex/poset.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <unordered_set>

namespace suboplex {

struct SubsetPoset::MobiusCache {
    explicit MobiusCache(std::size_t n) : once(n), rows(n) {}
    std::vector<std::once_flag> once;
    std::vector<std::vector<std::int64_t>> rows;
};

SubsetPoset::SubsetPoset(GroundSpec ground, std::vector<Subset> elements)
    : ground_(ground), elements_(std::move(elements)) {
    for (Subset s : elements_) validate_subset(s, ground_);
    std::sort(elements_.begin(), elements_.end(), [](Subset a, Subset b) {
        return a.size() != b.size() ? a.size() < b.size() : a.bits < b.bits;
    });
    if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end()) {
        throw ValidationError("poset elements must be distinct");
    }
    const std::size_t n = elements_.size();
    index_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) index_.emplace(elements_[i].bits, i);

    less_ = BitMatrix(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (elements_[i].proper_subset_of(elements_[j])) less_.set(i, j);
        }
    }

    // j covers i iff i < j and no k with i < k < j; k lies strictly between
    // i and j in the linear extension.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!less_.test(i, j)) continue;
            bool cover = true;
            for (std::size_t k = i + 1; k < j && cover; ++k) {
                if (less_.test(i, k) && less_.test(k, j)) cover = false;
            }
            if (cover) covers_.emplace_back(i, j);
        }
    }

    height_.assign(n, 0);
    std::vector<std::vector<std::size_t>> lower_covers(n);
    for (auto [lo, hi] : covers_) lower_covers[hi].push_back(lo);
    for (std::size_t j = 0; j < n; ++j) {
        int h = 0;
        for (std::size_t lo : lower_covers[j]) h = std::max(h, height_[lo] + 1);
        height_[j] = h;
    }

    mobius_ = std::make_shared<MobiusCache>(n);
}

std::optional<std::size_t> SubsetPoset::index_of(Subset s) const {
    if (auto it = index_.find(s.bits); it != index_.end()) return it->second;
    return std::nullopt;
}

std::size_t SubsetPoset::require_index(Subset s) const {
    if (auto idx = index_of(s)) return *idx;
    throw ValidationError("subset " + to_bitstring(s, ground_) + " is not an element of the poset");
}

std::vector<std::size_t> SubsetPoset::interval_indices(std::size_t lo, std::size_t hi, bool open) const {
    std::vector<std::size_t> out;
    if (!leq(lo, hi)) return out;
    for (std::size_t k = lo; k <= hi; ++k) {
        if (!leq(lo, k) || !leq(k, hi)) continue;
        if (open && (k == lo || k == hi)) continue;
        out.push_back(k);
    }
    return out;
}

std::int64_t SubsetPoset::mobius_index(std::size_t lo, std::size_t hi) const {
    if (!leq(lo, hi)) {
        throw ValidationError("Moebius function requires comparable elements " + to_bitstring(elements_[lo], ground_) +
                              " <= " + to_bitstring(elements_[hi], ground_));
    }
    MobiusCache& cache = *mobius_;
    std::call_once(cache.once[lo], [&] {
        std::vector<std::int64_t> row(elements_.size(), 0);
        row[lo] = 1;
        for (std::size_t j = lo + 1; j < elements_.size(); ++j) {
            if (!less_.test(lo, j)) continue;
            std::int64_t sum = 0;
            for (std::size_t k = lo; k < j; ++k) {
                if (leq(lo, k) && less_.test(k, j)) sum += row[k];
            }
            row[j] = -sum;
        }
        cache.rows[lo] = std::move(row);
    });
    return cache.rows[lo][hi];
}

int rank(const SubsetPoset& p) {
    if (p.empty()) throw ValidationError("rank of the empty poset is undefined");
    int best = 0;
    for (std::size_t i = 0; i < p.size(); ++i) best = std::max(best, p.height(i));
    return best;
}

std::vector<std::pair<Subset, Subset>> cover_relations(const SubsetPoset& p) {
    std::vector<std::pair<Subset, Subset>> out;
    out.reserve(p.cover_indices().size());
    for (auto [lo, hi] : p.cover_indices()) out.emplace_back(p.element(lo), p.element(hi));
    return out;
}

bool is_intersection_closed(const SubsetPoset& p) {
    const auto& e = p.elements();
    for (std::size_t i = 0; i < e.size(); ++i) {
        for (std::size_t j = i + 1; j < e.size(); ++j) {
            if (!p.contains(e[i] & e[j])) return false;
        }
    }
    return true;
}

std::optional<Subset> closure(const SubsetPoset& p, Subset a) {
    std::optional<Subset> result;
    for (Subset b : p.elements()) {
        if (!a.subset_of(b)) continue;
        result = result ? (*result & b) : b;
    }
    return result;
}

SubsetPoset interval(const SubsetPoset& p, Subset a, Subset b, bool open) {
    const std::size_t lo = p.require_index(a);
    const std::size_t hi = p.require_index(b);
    if (!p.leq(lo, hi)) {
        throw ValidationError("interval endpoints must satisfy A <= B: " + to_bitstring(a, p.ground()) + ", " +
                              to_bitstring(b, p.ground()));
    }
    std::vector<Subset> members;
    for (std::size_t k : p.interval_indices(lo, hi, open)) members.push_back(p.element(k));
    return SubsetPoset(p.ground(), std::move(members));
}

std::int64_t mobius(const SubsetPoset& p, Subset a, Subset b) {
    return p.mobius_index(p.require_index(a), p.require_index(b));
}

int interval_rank(const SubsetPoset& p, std::size_t lo, std::size_t hi) {
    if (!p.leq(lo, hi)) throw ValidationError("interval endpoints are not comparable");
    std::vector<int> longest(hi - lo + 1, -1);
    longest[0] = 0;
    for (std::size_t j = lo + 1; j <= hi; ++j) {
        if (!p.less(lo, j) || !p.leq(j, hi)) continue;
        int best = -1;
        for (std::size_t k = lo; k < j; ++k) {
            if (longest[k - lo] >= 0 && p.less(k, j)) best = std::max(best, longest[k - lo] + 1);
        }
        longest[j - lo] = best;
    }
    return longest[hi - lo];
}

std::optional<std::size_t> bottom_index(const SubsetPoset& p) {
    if (p.empty()) return std::nullopt;
    for (std::size_t j = 1; j < p.size(); ++j) {
        if (!p.less(0, j)) return std::nullopt;
    }
    return std::size_t{0};
}

std::optional<std::size_t> top_index(const SubsetPoset& p) {
    if (p.empty()) return std::nullopt;
    const std::size_t last = p.size() - 1;
    for (std::size_t j = 0; j < last; ++j) {
        if (!p.less(j, last)) return std::nullopt;
    }
    return last;
}

std::vector<Subset> intersection_closure(std::vector<Subset> family) {
    std::unordered_set<Subset> seen(family.begin(), family.end());
    std::vector<Subset> members(seen.begin(), seen.end());
    std::deque<Subset> pending(members.begin(), members.end());
    while (!pending.empty()) {
        const Subset x = pending.front();
        pending.pop_front();
        const std::size_t count = members.size();
        for (std::size_t k = 0; k < count; ++k) {
            const Subset meet = x & members[k];
            if (seen.insert(meet).second) {
                members.push_back(meet);
                pending.push_back(meet);
            }
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

}  // namespace suboplex
