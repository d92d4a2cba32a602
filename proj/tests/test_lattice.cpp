#include "doctest.h"
#include "oracles.hpp"

#include "torickit/error.hpp"
#include "torickit/lattice.hpp"
#include "torickit/linear_program.hpp"

#include <random>

using namespace torickit;

namespace {

IntVector ivec(const std::vector<long>& v) {
    IntVector out;
    for (long x : v) out.emplace_back(x);
    return out;
}

bool is_diagonal(const IntegerMatrix& s) {
    for (std::size_t i = 0; i < s.rows(); ++i)
        for (std::size_t j = 0; j < s.cols(); ++j)
            if (i != j && s(i, j) != 0) return false;
    return true;
}

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("smith normal form of small examples") {
    auto d = smith_normal_form(IntegerMatrix{{2, 0}, {0, 3}}).diagonal();
    CHECK(d == ivec({1, 6}));

    // Rays of the Hirzebruch surface with k = 2.
    IntegerMatrix h{{1, 0, -1, 0}, {0, 1, 2, -1}};
    auto snf = smith_normal_form(h);
    CHECK(snf.diagonal() == ivec({1, 1}));
    CHECK(snf.rank() == 2);

    auto z = smith_normal_form(IntegerMatrix(2, 3));
    CHECK(z.rank() == 0);
    CHECK(z.diagonal() == ivec({0, 0}));
}

TEST_CASE("smith normal form: decomposition and determinantal divisors on random matrices") {
    std::mt19937 rng(20261019);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
        auto a = oracle::random_matrix(rng, rows, cols, 9);
        if (trial % 5 == 0) a[rows - 1] = a[0];  // force rank deficiency now and then
        const IntegerMatrix m = oracle::to_matrix(a, cols);
        const auto snf = smith_normal_form(m);

        CHECK(snf.U * m * snf.V == snf.S);
        CHECK(snf.U.is_unimodular());
        CHECK(snf.V.is_unimodular());
        CHECK(is_diagonal(snf.S));

        const auto diag = snf.diagonal();
        Integer product = 1;
        for (std::size_t k = 0; k < diag.size(); ++k) {
            if (k < snf.rank()) {
                CHECK(diag[k] > 0);
                if (k + 1 < snf.rank()) CHECK(diag[k + 1] % diag[k] == 0);
            } else {
                CHECK(diag[k] == 0);
            }
            product *= diag[k];
            CHECK(product == oracle::determinantal_divisor(a, cols, k + 1));
        }
    }
}

TEST_CASE("hermite normal form is canonical for the row lattice") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
        auto a = oracle::random_matrix(rng, rows, cols, 6);
        const IntegerMatrix m = oracle::to_matrix(a, cols);
        const IntegerMatrix h = hermite_normal_form(m);
        CHECK(h.rows() == rank(m));

        // Left-multiplying by a unimodular matrix keeps the row lattice.
        IntegerMatrix u = IntegerMatrix::identity(rows);
        for (int step = 0; step < 6; ++step) {
            std::size_t i = rng() % rows, j = rng() % rows;
            if (i != j) u.add_row_multiple(i, j, Integer(static_cast<long>(rng() % 5) - 2));
        }
        CHECK(hermite_normal_form(u * m) == h);

        std::size_t last_pivot = 0;
        for (std::size_t i = 0; i < h.rows(); ++i) {
            std::size_t p = 0;
            while (h(i, p) == 0) ++p;
            if (i > 0) CHECK(p > last_pivot);
            CHECK(h(i, p) > 0);
            for (std::size_t k = 0; k < i; ++k) {
                CHECK(h(k, p) >= 0);
                CHECK(h(k, p) < h(i, p));
            }
            last_pivot = p;
        }
    }
}

TEST_CASE("kernel basis examples") {
    IntegerMatrix h{{1, 0, -1, 0}, {0, 1, 2, -1}};
    auto basis = kernel_basis(h);
    REQUIRE(basis.size() == 2);
    CHECK(basis[0] == ivec({1, 0, 1, 2}));
    CHECK(basis[1] == ivec({0, 1, 0, 1}));

    CHECK(kernel_basis(IntegerMatrix{{1, 0}, {0, 1}}).empty());
    CHECK(kernel_basis(IntegerMatrix{{2, 4}}) == std::vector<IntVector>{ivec({2, -1})});
}

TEST_CASE("kernel basis is saturated and spans every small kernel vector") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t rows = 1 + rng() % 2, cols = 2 + rng() % 2;
        auto a = oracle::random_matrix(rng, rows, cols, 4);
        const IntegerMatrix m = oracle::to_matrix(a, cols);
        const auto basis = kernel_basis(m);
        CHECK(basis.size() == cols - rank(m));
        for (const auto& b : basis) CHECK(m.apply(b) == IntVector(rows, 0));

        // Every brute-force kernel vector must be an integer combination.
        IntegerMatrix bm = basis.empty() ? IntegerMatrix(cols, 0) : IntegerMatrix::from_columns(basis, cols);
        for (const auto& v : oracle::kernel_vectors(a, cols, 4)) {
            std::vector<RationalVector> rowsq;
            for (std::size_t i = 0; i < cols; ++i) {
                RationalVector row;
                for (std::size_t j = 0; j < bm.cols(); ++j) row.emplace_back(bm(i, j));
                rowsq.push_back(row);
            }
            RationalVector rhs;
            for (long x : v) rhs.emplace_back(x);
            auto sol = solve_rational(rowsq, rhs, bm.cols());
            REQUIRE(sol.has_value());
            for (const auto& c : sol->particular) CHECK(c.get_den() == 1);
        }
    }
}

TEST_CASE("spans_lattice") {
    CHECK(spans_lattice({ivec({1, 0}), ivec({0, 1})}, 2));
    CHECK(spans_lattice({ivec({2, 1}), ivec({1, 1})}, 2));
    CHECK_FALSE(spans_lattice({ivec({2, 0}), ivec({0, 1})}, 2));
    CHECK_FALSE(spans_lattice({ivec({1, 0})}, 2));
    CHECK(spans_lattice({ivec({2, 0}), ivec({3, 0}), ivec({0, 1})}, 2));
}

TEST_CASE("positive kernel vector examples") {
    CHECK(positive_kernel_vector(IntegerMatrix{{1, 0, -1, 0}, {0, 1, 2, -1}}) == ivec({1, 1, 1, 3}));
    CHECK(positive_kernel_vector(IntegerMatrix{{1, 0, -1}, {0, 1, -1}}) == ivec({1, 1, 1}));
    CHECK_FALSE(positive_kernel_vector(IntegerMatrix{{1, 0}, {0, 1}}).has_value());
    CHECK_FALSE(positive_kernel_vector(IntegerMatrix{{1, 1}}).has_value());
}

TEST_CASE("positive kernel vector agrees with brute-force search") {
    std::mt19937 rng(5);
    int found_both = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t rows = 1 + rng() % 2, cols = 2 + rng() % 3;
        auto a = oracle::random_matrix(rng, rows, cols, 3);
        const IntegerMatrix m = oracle::to_matrix(a, cols);
        auto lp = positive_kernel_vector(m);
        auto brute = oracle::positive_kernel_search(a, cols, 6);
        if (brute) {
            REQUIRE(lp.has_value());
            ++found_both;
        }
        if (lp) {
            CHECK(m.apply(*lp) == IntVector(rows, 0));
            for (const auto& x : *lp) CHECK(x >= 1);
        }
    }
    CHECK(found_both > 10);
}

TEST_CASE("linear program statuses") {
    // min x0 + x1 s.t. x0 - x1 = 1
    auto r = minimize_standard_form({{1, -1}}, {1}, {1, 1});
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.objective == 1);
    CHECK(minimize_standard_form({{1, 1}}, {-1}, {1, 1}).status == LpStatus::Infeasible);
    CHECK(minimize_standard_form({{1, -1}}, {0}, {-1, 0}).status == LpStatus::Unbounded);
}

TEST_CASE("complete_degrees") {
    IntegerMatrix h{{1, 0, -1, 0}, {0, 1, 2, -1}};
    CHECK(complete_degrees(h, {{0, 3}, {1, 5}}) == ivec({3, 5, 3, 11}));
    CHECK(code_of([&] { complete_degrees(h, {{0, 3}}); }) == ErrorCode::Underdetermined);
    CHECK(code_of([&] { complete_degrees(h, {{0, 3}, {1, 5}, {2, 4}}); }) == ErrorCode::Inconsistent);
    CHECK(code_of([&] { complete_degrees(IntegerMatrix{{2, -1}}, {{1, 1}}); }) == ErrorCode::NonIntegral);
    CHECK(code_of([&] { complete_degrees(h, {{0, 1}, {1, -5}}); }) == ErrorCode::NonPositive);
    CHECK(code_of([&] { complete_degrees(h, {{7, 1}}); }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("complete_degrees reproduces kernel vectors from their free coordinates") {
    std::mt19937 rng(3);
    IntegerMatrix h{{1, 0, -1, 0}, {0, 1, 2, -1}};
    for (int trial = 0; trial < 50; ++trial) {
        long a = 1 + rng() % 9, b = 1 + rng() % 9;
        IntVector expected = ivec({a, b, a, 2 * a + b});
        CHECK(h.apply(expected) == IntVector(2, 0));
        CHECK(complete_degrees(h, {{0, a}, {1, b}}) == expected);
        CHECK(complete_degrees(h, {{2, a}, {1, b}}) == expected);
    }
}

TEST_CASE("unimodular inverse and clear_denominators") {
    IntegerMatrix u{{2, 1}, {1, 1}};
    CHECK(unimodular_inverse(u) * u == IntegerMatrix::identity(2));
    CHECK(code_of([&] { unimodular_inverse(IntegerMatrix{{2, 0}, {0, 1}}); }) == ErrorCode::NonIntegral);
    CHECK(clear_denominators({Rational(1, 2), Rational(1, 3), Rational(1)}) == ivec({3, 2, 6}));
}
