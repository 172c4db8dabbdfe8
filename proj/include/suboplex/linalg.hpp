#pragma once
// Exact rank computations over GF(p) and Q.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace suboplex {

/// Coefficient field for homology: a prime field GF(p), p < 2^31, or Q.
class FieldSpec {
public:
    static FieldSpec prime(std::uint32_t p);
    static FieldSpec rationals() { return FieldSpec(0); }
    /// "2", "3", ... or "Q".
    static FieldSpec parse(std::string_view text);

    bool is_rational() const noexcept { return p_ == 0; }
    /// Prime p for GF(p), 0 for Q.
    std::uint32_t characteristic() const noexcept { return p_; }
    std::string to_string() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
    explicit FieldSpec(std::uint32_t p) : p_(p) {}
    std::uint32_t p_;
};

inline FieldSpec gf2() { return FieldSpec::prime(2); }

bool is_prime(std::uint64_t p);

/// Column-sparse integer matrix with small entries (boundary matrices have
/// entries +-1). Columns hold (row, value) pairs sorted by row, no zeros.
class SparseMatrix {
public:
    using Entry = std::pair<std::uint32_t, int>;
    using Column = std::vector<Entry>;

    SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return columns_.size(); }
    const Column& column(std::size_t j) const { return columns_[j]; }
    /// Replaces column j; entries are sorted and zero values dropped.
    void set_column(std::size_t j, Column entries);

private:
    std::size_t rows_;
    std::vector<Column> columns_;
};

/// Rank over the field. Uses bit-packed or word-packed dense elimination for
/// small matrices over GF(p) and sparse column reduction otherwise.
std::size_t rank(const SparseMatrix& m, const FieldSpec& field);

/// Sparse column reduction (any field).
std::size_t rank_sparse(const SparseMatrix& m, const FieldSpec& field);

/// Dense Gaussian elimination through the SIMD kernels (prime fields only).
std::size_t rank_dense(const SparseMatrix& m, const FieldSpec& field);

/// Whether the integer product a*b vanishes mod p (exactly for Q). Used to
/// check that consecutive boundary maps compose to zero.
bool product_is_zero(const SparseMatrix& a, const SparseMatrix& b, const FieldSpec& field);

}  // namespace suboplex
