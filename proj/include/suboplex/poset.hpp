#pragma once
// Finite families of subsets of [n] ordered by inclusion.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "suboplex/subsets.hpp"

namespace suboplex {

/// Dense square bit matrix; row i is a bitset over element indices.
class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), data_(n * words_, 0) {}

    std::size_t size() const noexcept { return n_; }
    bool test(std::size_t i, std::size_t j) const { return (data_[i * words_ + j / 64] >> (j % 64)) & 1U; }
    void set(std::size_t i, std::size_t j) { data_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64); }
    std::span<const std::uint64_t> row(std::size_t i) const { return {data_.data() + i * words_, words_}; }

private:
    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> data_;
};

class SubsetPoset {
public:
    /// Validates distinctness and width. Elements are stored sorted by
    /// (cardinality, bits), which is a linear extension of inclusion.
    SubsetPoset(GroundSpec ground, std::vector<Subset> elements);

    const GroundSpec& ground() const noexcept { return ground_; }
    std::size_t size() const noexcept { return elements_.size(); }
    bool empty() const noexcept { return elements_.empty(); }
    const std::vector<Subset>& elements() const noexcept { return elements_; }
    Subset element(std::size_t i) const { return elements_[i]; }

    std::optional<std::size_t> index_of(Subset s) const;
    bool contains(Subset s) const { return index_of(s).has_value(); }
    /// Index of s; throws ValidationError if s is not an element.
    std::size_t require_index(Subset s) const;

    /// e_i subset-or-equal e_j. Indices follow `elements()`.
    bool leq(std::size_t i, std::size_t j) const { return i == j || less_.test(i, j); }
    bool less(std::size_t i, std::size_t j) const { return less_.test(i, j); }
    /// Row i of the strict order: bit j set iff e_i < e_j.
    std::span<const std::uint64_t> strictly_above(std::size_t i) const { return less_.row(i); }

    /// Cover relations as index pairs (lower, upper), lexicographic order.
    const std::vector<std::pair<std::size_t, std::size_t>>& cover_indices() const noexcept { return covers_; }
    /// Length of the longest chain ending at element i.
    int height(std::size_t i) const { return height_[i]; }

    /// Elements C with lo <= C <= hi (closed) or lo < C < hi (open), as indices.
    std::vector<std::size_t> interval_indices(std::size_t lo, std::size_t hi, bool open) const;

    /// Memoized Moebius function on indices; requires lo <= hi.
    std::int64_t mobius_index(std::size_t lo, std::size_t hi) const;

private:
    struct MobiusCache;

    GroundSpec ground_;
    std::vector<Subset> elements_;
    std::unordered_map<std::uint64_t, std::size_t> index_;
    BitMatrix less_;
    std::vector<std::pair<std::size_t, std::size_t>> covers_;
    std::vector<int> height_;
    std::shared_ptr<MobiusCache> mobius_;
};

/// Longest chain length (elements minus one). Throws on the empty poset.
int rank(const SubsetPoset& p);

std::vector<std::pair<Subset, Subset>> cover_relations(const SubsetPoset& p);

bool is_intersection_closed(const SubsetPoset& p);

/// Intersection of all elements containing `a`; nullopt when none does.
std::optional<Subset> closure(const SubsetPoset& p, Subset a);

/// Closed [a,b] or open (a,b) interval as a standalone poset.
SubsetPoset interval(const SubsetPoset& p, Subset a, Subset b, bool open);

/// mu(a,b). Throws ValidationError unless a <= b in p.
std::int64_t mobius(const SubsetPoset& p, Subset a, Subset b);

/// Rank of the closed interval [a,b] (longest chain from a to b).
int interval_rank(const SubsetPoset& p, std::size_t lo, std::size_t hi);

/// Smallest and largest element when they exist.
std::optional<std::size_t> bottom_index(const SubsetPoset& p);
std::optional<std::size_t> top_index(const SubsetPoset& p);

/// Closes a family under pairwise intersection (fixpoint), deduplicated.
std::vector<Subset> intersection_closure(std::vector<Subset> family);

}  // namespace suboplex
