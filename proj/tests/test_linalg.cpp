#include <doctest.h>

#include <random>

#include "suboplex/error.hpp"
#include "suboplex/kernels.hpp"
#include "suboplex/linalg.hpp"

using namespace suboplex;

namespace {

SparseMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int density_percent) {
    SparseMatrix m(rows, cols);
    for (std::size_t j = 0; j < cols; ++j) {
        SparseMatrix::Column col;
        for (std::size_t i = 0; i < rows; ++i) {
            if (static_cast<int>(rng() % 100) < density_percent) {
                col.emplace_back(static_cast<std::uint32_t>(i), static_cast<int>(rng() % 5) - 2);
            }
        }
        m.set_column(j, std::move(col));
    }
    return m;
}

SparseMatrix from_rows(const std::vector<std::vector<int>>& rows) {
    SparseMatrix m(rows.size(), rows.front().size());
    for (std::size_t j = 0; j < rows.front().size(); ++j) {
        SparseMatrix::Column col;
        for (std::size_t i = 0; i < rows.size(); ++i) col.emplace_back(static_cast<std::uint32_t>(i), rows[i][j]);
        m.set_column(j, std::move(col));
    }
    return m;
}

}  // namespace

TEST_CASE("field parsing") {
    CHECK(FieldSpec::parse("2") == gf2());
    CHECK(FieldSpec::parse("Q").is_rational());
    CHECK(FieldSpec::parse("3").characteristic() == 3);
    CHECK(FieldSpec::parse("Q").to_string() == "Q");
    CHECK(FieldSpec::parse("5").to_string() == "GF(5)");
    CHECK_THROWS_AS(FieldSpec::parse("4"), ValidationError);
    CHECK_THROWS_AS(FieldSpec::parse("x"), ValidationError);
    CHECK_THROWS_AS(FieldSpec::parse(""), ValidationError);
}

TEST_CASE("rank depends on the characteristic") {
    const SparseMatrix twos = from_rows({{2, 0}, {0, 2}});
    CHECK(rank(twos, gf2()) == 0);
    CHECK(rank(twos, FieldSpec::prime(3)) == 2);
    CHECK(rank(twos, FieldSpec::rationals()) == 2);

    const SparseMatrix m = from_rows({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
    CHECK(rank(m, gf2()) == 2);
    CHECK(rank(m, FieldSpec::prime(3)) == 3);
    CHECK(rank(m, FieldSpec::rationals()) == 3);
    CHECK_THROWS(rank_dense(m, FieldSpec::rationals()));
}

TEST_CASE("dense and sparse elimination agree on random matrices") {
    std::mt19937_64 rng(0x5eed0201);
    for (std::uint32_t p : {2u, 3u, 5u, 65521u, 2147483647u}) {
        const FieldSpec field = FieldSpec::prime(p);
        for (int trial = 0; trial < 60; ++trial) {
            const std::size_t rows = 1 + rng() % 90;
            const std::size_t cols = 1 + rng() % 90;
            const SparseMatrix m = random_matrix(rng, rows, cols, 5 + static_cast<int>(rng() % 40));
            const std::size_t sparse = rank_sparse(m, field);
            CHECK(rank_dense(m, field) == sparse);
            CHECK(sparse <= std::min(rows, cols));
        }
    }
}

TEST_CASE("dense elimination is identical under every kernel variant") {
    std::mt19937_64 rng(0x5eed0202);
    std::vector<SparseMatrix> matrices;
    for (int trial = 0; trial < 30; ++trial) matrices.push_back(random_matrix(rng, 70, 90, 20));
    for (std::uint32_t p : {2u, 7u, 1000003u}) {
        kernels::force_isa(kernels::Isa::kScalar);
        std::vector<std::size_t> reference;
        for (const auto& m : matrices) reference.push_back(rank_dense(m, FieldSpec::prime(p)));
        for (kernels::Isa isa : kernels::available_isas()) {
            kernels::force_isa(isa);
            for (std::size_t k = 0; k < matrices.size(); ++k) CHECK(rank_dense(matrices[k], FieldSpec::prime(p)) == reference[k]);
        }
    }
    kernels::reset_isa();
}

TEST_CASE("rational rank bounds every prime rank") {
    std::mt19937_64 rng(0x5eed0203);
    for (int trial = 0; trial < 40; ++trial) {
        const SparseMatrix m = random_matrix(rng, 1 + rng() % 25, 1 + rng() % 25, 30);
        const std::size_t q = rank(m, FieldSpec::rationals());
        for (std::uint32_t p : {2u, 3u, 5u}) CHECK(rank(m, FieldSpec::prime(p)) <= q);
        CHECK(rank(m, FieldSpec::prime(2147483647u)) == q);
    }
}

TEST_CASE("product_is_zero") {
    const SparseMatrix a = from_rows({{1, 1}});
    const SparseMatrix b = from_rows({{1}, {-1}});
    CHECK(product_is_zero(a, b, FieldSpec::rationals()));
    const SparseMatrix c = from_rows({{1}, {1}});
    CHECK_FALSE(product_is_zero(a, c, FieldSpec::rationals()));
    CHECK(product_is_zero(a, c, gf2()));
}
