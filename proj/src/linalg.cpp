#include "suboplex/linalg.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <span>

#include "suboplex/error.hpp"
#include "suboplex/kernels.hpp"

namespace suboplex {

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
    if (p >= (1U << 31) || !is_prime(p)) {
        throw ValidationError("field characteristic must be a prime below 2^31, got " + std::to_string(p));
    }
    return FieldSpec(p);
}

FieldSpec FieldSpec::parse(std::string_view text) {
    if (text == "Q" || text == "q") return rationals();
    if (text.empty() || text.size() > 10 ||
        !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw ValidationError("field must be a prime or \"Q\", got \"" + std::string(text) + "\"");
    }
    const std::uint64_t value = std::stoull(std::string(text));
    if (value >= (1ULL << 31)) throw ValidationError("field characteristic too large: " + std::string(text));
    return prime(static_cast<std::uint32_t>(value));
}

std::string FieldSpec::to_string() const { return is_rational() ? "Q" : "GF(" + std::to_string(p_) + ")"; }

void SparseMatrix::set_column(std::size_t j, Column entries) {
    std::sort(entries.begin(), entries.end());
    std::erase_if(entries, [](const Entry& e) { return e.second == 0; });
    columns_.at(j) = std::move(entries);
}

namespace {

struct PrimeOps {
    using value_type = std::uint32_t;
    std::uint32_t p;

    value_type from_int(int v) const {
        const long long r = static_cast<long long>(v) % static_cast<long long>(p);
        return static_cast<value_type>(r < 0 ? r + p : r);
    }
    bool is_zero(value_type v) const { return v == 0; }
    value_type mul(value_type a, value_type b) const {
        return static_cast<value_type>(static_cast<std::uint64_t>(a) * b % p);
    }
    // a - c*b
    value_type sub_mul(value_type a, value_type c, value_type b) const {
        return static_cast<value_type>((a + static_cast<std::uint64_t>(p - c) * b) % p);
    }
    value_type inverse(value_type a) const {
        std::uint64_t result = 1, base = a, e = p - 2;
        while (e > 0) {
            if (e & 1U) result = result * base % p;
            base = base * base % p;
            e >>= 1U;
        }
        return static_cast<value_type>(result);
    }
};

struct RationalOps {
    using value_type = mpq_class;

    value_type from_int(int v) const { return mpq_class(v); }
    bool is_zero(const value_type& v) const { return sgn(v) == 0; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type sub_mul(const value_type& a, const value_type& c, const value_type& b) const { return a - c * b; }
    value_type inverse(const value_type& a) const { return 1 / a; }
};

// Standard column reduction: each column is reduced against the stored pivot
// columns indexed by their lowest nonzero row until its low row is new.
template <typename Ops>
std::size_t sparse_column_rank(const SparseMatrix& m, const Ops& ops) {
    using T = typename Ops::value_type;
    using Col = std::vector<std::pair<std::uint32_t, T>>;

    std::vector<Col> pivot_by_low(m.rows());
    std::vector<char> has_pivot(m.rows(), 0);
    std::size_t rank = 0;
    Col col, merged;

    for (std::size_t j = 0; j < m.cols(); ++j) {
        col.clear();
        for (const auto& [row, v] : m.column(j)) {
            T value = ops.from_int(v);
            if (!ops.is_zero(value)) col.emplace_back(row, std::move(value));
        }
        while (!col.empty()) {
            const std::uint32_t low = col.back().first;
            if (!has_pivot[low]) {
                const T inv = ops.inverse(col.back().second);
                for (auto& e : col) e.second = ops.mul(e.second, inv);
                pivot_by_low[low] = std::move(col);
                col = Col{};
                has_pivot[low] = 1;
                ++rank;
                break;
            }
            // col -= c * pivot, where the pivot's low coefficient is 1.
            const T c = col.back().second;
            const Col& piv = pivot_by_low[low];
            merged.clear();
            std::size_t a = 0, b = 0;
            while (a < col.size() || b < piv.size()) {
                if (b == piv.size() || (a < col.size() && col[a].first < piv[b].first)) {
                    merged.push_back(std::move(col[a++]));
                } else if (a == col.size() || piv[b].first < col[a].first) {
                    T value = ops.sub_mul(ops.from_int(0), c, piv[b].second);
                    merged.emplace_back(piv[b].first, std::move(value));
                    ++b;
                } else {
                    T value = ops.sub_mul(col[a].second, c, piv[b].second);
                    if (!ops.is_zero(value)) merged.emplace_back(col[a].first, std::move(value));
                    ++a;
                    ++b;
                }
            }
            std::swap(col, merged);
        }
    }
    return rank;
}

std::size_t dense_rank_gf2(const SparseMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    const std::size_t words = (cols + 63) / 64;
    std::vector<std::uint64_t> data(rows * words, 0);
    for (std::size_t j = 0; j < cols; ++j) {
        for (const auto& [row, v] : m.column(j)) {
            if (v % 2 != 0) data[row * words + j / 64] |= std::uint64_t{1} << (j % 64);
        }
    }
    auto row_span = [&](std::size_t r, std::size_t from_word) {
        return std::span<std::uint64_t>(data.data() + r * words + from_word, words - from_word);
    };

    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        const std::size_t w = c / 64;
        const std::uint64_t bit = std::uint64_t{1} << (c % 64);
        std::size_t pivot = rank;
        while (pivot < rows && (data[pivot * words + w] & bit) == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank) {
            std::swap_ranges(row_span(pivot, w).begin(), row_span(pivot, w).end(), row_span(rank, w).begin());
        }
        const auto pivot_row = row_span(rank, w);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (data[r * words + w] & bit) kernels::xor_words(row_span(r, w), pivot_row);
        }
        ++rank;
    }
    return rank;
}

std::size_t dense_rank_gfp(const SparseMatrix& m, std::uint32_t p) {
    const PrimeOps ops{p};
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::uint32_t> data(rows * cols, 0);
    for (std::size_t j = 0; j < cols; ++j) {
        for (const auto& [row, v] : m.column(j)) data[row * cols + j] = ops.from_int(v);
    }
    auto row_span = [&](std::size_t r, std::size_t from) {
        return std::span<std::uint32_t>(data.data() + r * cols + from, cols - from);
    };

    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && data[pivot * cols + c] == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank) {
            std::swap_ranges(row_span(pivot, c).begin(), row_span(pivot, c).end(), row_span(rank, c).begin());
        }
        const std::uint32_t inv = ops.inverse(data[rank * cols + c]);
        const auto pivot_row = row_span(rank, c);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const std::uint32_t e = data[r * cols + c];
            if (e == 0) continue;
            const std::uint32_t factor = p - ops.mul(e, inv);
            kernels::axpy_mod(row_span(r, c), pivot_row, factor, p);
        }
        ++rank;
    }
    return rank;
}

constexpr std::size_t kDenseEntryLimit = std::size_t{1} << 22;

}  // namespace

std::size_t rank_sparse(const SparseMatrix& m, const FieldSpec& field) {
    if (field.is_rational()) return sparse_column_rank(m, RationalOps{});
    return sparse_column_rank(m, PrimeOps{field.characteristic()});
}

std::size_t rank_dense(const SparseMatrix& m, const FieldSpec& field) {
    if (field.is_rational()) throw ValidationError("dense elimination is only available over prime fields");
    if (field.characteristic() == 2) return dense_rank_gf2(m);
    return dense_rank_gfp(m, field.characteristic());
}

std::size_t rank(const SparseMatrix& m, const FieldSpec& field) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    if (!field.is_rational() && m.rows() * m.cols() <= kDenseEntryLimit) return rank_dense(m, field);
    return rank_sparse(m, field);
}

bool product_is_zero(const SparseMatrix& a, const SparseMatrix& b, const FieldSpec& field) {
    if (a.cols() != b.rows()) throw ValidationError("matrix shapes do not compose");
    const long long p = field.characteristic();
    // Row-major view of a.
    std::vector<std::vector<std::pair<std::uint32_t, int>>> a_rows(a.rows());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        for (const auto& [row, v] : a.column(j)) a_rows[row].emplace_back(static_cast<std::uint32_t>(j), v);
    }
    for (std::size_t j = 0; j < b.cols(); ++j) {
        std::map<std::uint32_t, int> bcol;
        for (const auto& [row, v] : b.column(j)) bcol[row] = v;
        for (const auto& arow : a_rows) {
            long long sum = 0;
            for (const auto& [k, v] : arow) {
                if (auto it = bcol.find(k); it != bcol.end()) sum += static_cast<long long>(v) * it->second;
            }
            if (p != 0) sum %= p;
            if (sum != 0) return false;
        }
    }
    return true;
}

}  // namespace suboplex
