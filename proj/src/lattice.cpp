#include "torickit/lattice.hpp"

#include "torickit/error.hpp"
#include "torickit/linear_program.hpp"

#include <algorithm>
#include <utility>

namespace torickit {

IntVector SmithDecomposition::diagonal() const {
    const std::size_t k = std::min(S.rows(), S.cols());
    IntVector d(k);
    for (std::size_t i = 0; i < k; ++i) d[i] = S(i, i);
    return d;
}

std::size_t SmithDecomposition::rank() const {
    std::size_t r = 0;
    for (const auto& d : diagonal())
        if (d != 0) ++r;
    return r;
}

namespace {

// Smallest nonzero |entry| in the trailing block starting at (t, t); ties go
// to the lowest row, then the lowest column.
std::optional<std::pair<std::size_t, std::size_t>> find_pivot(const IntegerMatrix& s, std::size_t t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Integer best_abs;
    for (std::size_t i = t; i < s.rows(); ++i)
        for (std::size_t j = t; j < s.cols(); ++j) {
            if (s(i, j) == 0) continue;
            Integer a = abs(s(i, j));
            if (!best || a < best_abs) {
                best = {i, j};
                best_abs = a;
            }
        }
    return best;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntegerMatrix& a) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    SmithDecomposition d{IntegerMatrix::identity(m), a, IntegerMatrix::identity(n)};
    IntegerMatrix& s = d.S;

    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        for (;;) {
            auto pivot = find_pivot(s, t);
            if (!pivot) return d;  // trailing block is zero
            auto [pi, pj] = *pivot;
            s.swap_rows(t, pi);
            d.U.swap_rows(t, pi);
            s.swap_cols(t, pj);
            d.V.swap_cols(t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (s(i, t) == 0) continue;
                Integer q = s(i, t) / s(t, t);
                s.add_row_multiple(i, t, -q);
                d.U.add_row_multiple(i, t, -q);
                if (s(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (s(t, j) == 0) continue;
                Integer q = s(t, j) / s(t, t);
                s.add_col_multiple(j, t, -q);
                d.V.add_col_multiple(j, t, -q);
                if (s(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // Divisibility: fold an offending row into the pivot row.
            std::optional<std::size_t> bad_row;
            for (std::size_t i = t + 1; i < m && !bad_row; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (s(i, j) % s(t, t) != 0) {
                        bad_row = i;
                        break;
                    }
            if (!bad_row) break;
            s.add_row_multiple(t, *bad_row, 1);
            d.U.add_row_multiple(t, *bad_row, 1);
        }
        if (s(t, t) < 0) {
            s.negate_row(t);
            d.U.negate_row(t);
        }
    }
    return d;
}

IntegerMatrix hermite_normal_form(const IntegerMatrix& a) {
    IntegerMatrix h = a;
    std::size_t row = 0;
    for (std::size_t col = 0; col < h.cols() && row < h.rows(); ++col) {
        for (;;) {
            std::optional<std::size_t> best;
            for (std::size_t i = row; i < h.rows(); ++i) {
                if (h(i, col) == 0) continue;
                if (!best || abs(h(i, col)) < abs(h(*best, col))) best = i;
            }
            if (!best) break;
            h.swap_rows(row, *best);
            bool clean = true;
            for (std::size_t i = row + 1; i < h.rows(); ++i) {
                if (h(i, col) == 0) continue;
                Integer q = h(i, col) / h(row, col);
                h.add_row_multiple(i, row, -q);
                if (h(i, col) != 0) clean = false;
            }
            if (clean) break;
        }
        if (h(row, col) == 0) continue;
        if (h(row, col) < 0) h.negate_row(row);
        for (std::size_t i = 0; i < row; ++i) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), h(i, col).get_mpz_t(), h(row, col).get_mpz_t());
            h.add_row_multiple(i, row, -q);
        }
        ++row;
    }
    IntegerMatrix out(row, h.cols());
    for (std::size_t i = 0; i < row; ++i)
        for (std::size_t j = 0; j < h.cols(); ++j) out(i, j) = h(i, j);
    return out;
}

std::size_t rank(const IntegerMatrix& a) { return hermite_normal_form(a).rows(); }

bool spans_lattice(const std::vector<IntVector>& generators, std::size_t n) {
    for (const auto& g : generators)
        if (g.size() != n) throw Error(ErrorCode::DimensionMismatch, "generator of wrong dimension");
    if (n == 0) return true;
    if (generators.size() < n) return false;
    auto snf = smith_normal_form(IntegerMatrix::from_columns(generators, n));
    for (const auto& d : snf.diagonal())
        if (d != 1) return false;
    return true;
}

std::vector<IntVector> kernel_basis(const IntegerMatrix& n) {
    auto snf = smith_normal_form(n);
    const std::size_t r = snf.rank();
    const std::size_t cols = n.cols();
    if (r == cols) return {};
    IntegerMatrix basis(cols - r, cols);
    for (std::size_t k = r; k < cols; ++k)
        for (std::size_t i = 0; i < cols; ++i) basis(k - r, i) = snf.V(i, k);
    IntegerMatrix h = hermite_normal_form(basis);
    std::vector<IntVector> out;
    out.reserve(h.rows());
    for (std::size_t i = 0; i < h.rows(); ++i) out.push_back(h.row(i));
    return out;
}

IntVector clear_denominators(const RationalVector& v) {
    Integer l = 1;
    for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rational scaled = v[i] * l;
        out[i] = scaled.get_num();
    }
    return out;
}

std::optional<IntVector> positive_kernel_vector(const IntegerMatrix& n) {
    const std::size_t r = n.cols();
    if (r == 0) return std::nullopt;
    // Substitute x = 1 + z with z >= 0:  N z = -N 1, minimize sum z.
    IntegerMatrix h = hermite_normal_form(n);
    std::vector<RationalVector> a(h.rows(), RationalVector(r));
    RationalVector b(h.rows());
    for (std::size_t i = 0; i < h.rows(); ++i) {
        Integer row_sum = 0;
        for (std::size_t j = 0; j < r; ++j) {
            a[i][j] = h(i, j);
            row_sum += h(i, j);
        }
        b[i] = -row_sum;
    }
    LpResult lp = minimize_standard_form(a, b, RationalVector(r, Rational(1)));
    if (lp.status != LpStatus::Optimal) return std::nullopt;
    RationalVector x(r);
    for (std::size_t j = 0; j < r; ++j) x[j] = lp.x[j] + 1;
    return clear_denominators(x);
}

std::optional<RationalSolution> solve_rational(const std::vector<RationalVector>& a,
                                               const RationalVector& b, std::size_t cols) {
    const std::size_t m = a.size();
    if (b.size() != m) throw Error(ErrorCode::DimensionMismatch, "right-hand side length mismatch");
    std::vector<RationalVector> t(m, RationalVector(cols + 1));
    for (std::size_t i = 0; i < m; ++i) {
        if (a[i].size() != cols) throw Error(ErrorCode::DimensionMismatch, "row length mismatch");
        for (std::size_t j = 0; j < cols; ++j) t[i][j] = a[i][j];
        t[i][cols] = b[i];
    }
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m; ++col) {
        std::size_t p = row;
        while (p < m && t[p][col] == 0) ++p;
        if (p == m) continue;
        std::swap(t[p], t[row]);
        const Rational inv = 1 / t[row][col];
        for (auto& v : t[row]) v *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || t[i][col] == 0) continue;
            const Rational f = t[i][col];
            for (std::size_t j = col; j <= cols; ++j) t[i][j] -= f * t[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < m; ++i)
        if (t[i][cols] != 0) return std::nullopt;

    RationalSolution sol;
    sol.particular.assign(cols, Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) sol.particular[pivots[i]] = t[i][cols];
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        RationalVector v(cols, Rational(0));
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -t[i][free];
        sol.nullspace.push_back(std::move(v));
    }
    return sol;
}

IntVector complete_degrees(const IntegerMatrix& n, const std::map<std::size_t, Integer>& partial) {
    const std::size_t r = n.cols();
    for (const auto& [index, value] : partial) {
        if (index >= r) throw Error(ErrorCode::IndexOutOfRange, "pinned index out of range");
        if (value < 1) throw Error(ErrorCode::NonPositive, "pinned degree must be positive");
    }
    const auto basis = kernel_basis(n);
    const std::size_t m = basis.size();

    std::vector<RationalVector> a;
    RationalVector b;
    for (const auto& [index, value] : partial) {
        RationalVector row(m);
        for (std::size_t j = 0; j < m; ++j) row[j] = basis[j][index];
        a.push_back(std::move(row));
        b.emplace_back(value);
    }
    auto sol = solve_rational(a, b, m);
    if (!sol) throw Error(ErrorCode::Inconsistent, "no kernel vector extends the pinned degrees");
    if (!sol->nullspace.empty())
        throw Error(ErrorCode::Underdetermined,
                    "pinned degrees leave " + std::to_string(sol->nullspace.size()) +
                        " free parameter(s)");

    RationalVector x(r, Rational(0));
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < r; ++i) x[i] += sol->particular[j] * basis[j][i];
    IntVector out(r);
    for (std::size_t i = 0; i < r; ++i) {
        if (x[i].get_den() != 1)
            throw Error(ErrorCode::NonIntegral, "completed degree " + to_string(x[i]) + " is not an integer");
        out[i] = x[i].get_num();
    }
    for (std::size_t i = 0; i < r; ++i)
        if (out[i] < 1)
            throw Error(ErrorCode::NonPositive,
                        "completed degree at index " + std::to_string(i + 1) + " is " + out[i].get_str());
    return out;
}

IntegerMatrix unimodular_inverse(const IntegerMatrix& u) {
    const std::size_t n = u.rows();
    if (u.cols() != n) throw Error(ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
    std::vector<RationalVector> a(n, RationalVector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = u(i, j);
    IntegerMatrix inv(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        RationalVector unit(n, Rational(0));
        unit[k] = 1;
        auto sol = solve_rational(a, unit, n);
        if (!sol || !sol->nullspace.empty())
            throw Error(ErrorCode::NonIntegral, "matrix is singular");
        for (std::size_t i = 0; i < n; ++i) {
            if (sol->particular[i].get_den() != 1)
                throw Error(ErrorCode::NonIntegral, "matrix is not unimodular");
            inv(i, k) = sol->particular[i].get_num();
        }
    }
    return inv;
}

}  // namespace torickit
