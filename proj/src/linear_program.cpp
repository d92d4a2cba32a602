#include "torickit/linear_program.hpp"

#include "torickit/error.hpp"

#include <cstddef>
#include <optional>

namespace torickit {
namespace {

// Tableau rows 0..m-1 are constraints, row m is the reduced-cost row.
// Column `rhs` holds the right-hand side; the objective value sits at
// tab[m][rhs] with a negated sign.
struct Tableau {
    std::vector<RationalVector> tab;
    std::vector<std::size_t> basis;
    std::size_t rhs = 0;

    std::size_t rows() const { return basis.size(); }

    void pivot(std::size_t r, std::size_t c) {
        const Rational p = tab[r][c];
        for (auto& v : tab[r]) v /= p;
        for (std::size_t i = 0; i < tab.size(); ++i) {
            if (i == r || tab[i][c] == 0) continue;
            const Rational f = tab[i][c];
            for (std::size_t j = 0; j < tab[i].size(); ++j) tab[i][j] -= f * tab[r][j];
        }
        basis[r] = c;
    }

    // Bland's rule over columns [0, ncols). Returns false when unbounded.
    bool run(std::size_t ncols) {
        const std::size_t m = rows();
        for (;;) {
            std::optional<std::size_t> enter;
            for (std::size_t j = 0; j < ncols; ++j) {
                if (tab[m][j] < 0) {
                    enter = j;
                    break;
                }
            }
            if (!enter) return true;
            std::optional<std::size_t> leave;
            Rational best;
            for (std::size_t i = 0; i < m; ++i) {
                if (tab[i][*enter] <= 0) continue;
                Rational ratio = tab[i][rhs] / tab[i][*enter];
                if (!leave || ratio < best || (ratio == best && basis[i] < basis[*leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (!leave) return false;
            pivot(*leave, *enter);
        }
    }
};

}  // namespace

LpResult minimize_standard_form(const std::vector<RationalVector>& a, const RationalVector& b,
                                const RationalVector& c) {
    const std::size_t m = a.size();
    const std::size_t n = c.size();
    if (b.size() != m)
        throw Error(ErrorCode::DimensionMismatch, "right-hand side length differs from row count");
    for (const auto& row : a)
        if (row.size() != n)
            throw Error(ErrorCode::DimensionMismatch, "constraint row length differs from cost length");

    // Phase 1: artificials n..n+m-1.
    Tableau t;
    t.rhs = n + m;
    t.tab.assign(m + 1, RationalVector(n + m + 1));
    t.basis.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        const bool flip = b[i] < 0;
        for (std::size_t j = 0; j < n; ++j) t.tab[i][j] = flip ? Rational(-a[i][j]) : a[i][j];
        t.tab[i][n + i] = 1;
        t.tab[i][t.rhs] = flip ? Rational(-b[i]) : b[i];
        t.basis[i] = n + i;
    }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) t.tab[m][j] -= t.tab[i][j];
    for (std::size_t i = 0; i < m; ++i) t.tab[m][t.rhs] -= t.tab[i][t.rhs];
    t.run(n + m);

    LpResult result;
    if (t.tab[m][t.rhs] != 0) return result;  // infeasible

    // Drive zero-level artificials out of the basis; drop redundant rows.
    for (std::size_t i = 0; i < t.rows();) {
        if (t.basis[i] < n) {
            ++i;
            continue;
        }
        std::optional<std::size_t> col;
        for (std::size_t j = 0; j < n; ++j)
            if (t.tab[i][j] != 0) {
                col = j;
                break;
            }
        if (col) {
            t.pivot(i, *col);
            ++i;
        } else {
            t.tab.erase(t.tab.begin() + static_cast<std::ptrdiff_t>(i));
            t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
        }
    }

    // Phase 2 reduced costs.
    const std::size_t rows = t.rows();
    RationalVector& cost = t.tab[rows];
    for (auto& v : cost) v = 0;
    for (std::size_t j = 0; j < n; ++j) cost[j] = c[j];
    for (std::size_t i = 0; i < rows; ++i) {
        const Rational cb = c[t.basis[i]];
        if (cb == 0) continue;
        for (std::size_t j = 0; j <= t.rhs; ++j) cost[j] -= cb * t.tab[i][j];
    }
    if (!t.run(n)) {
        result.status = LpStatus::Unbounded;
        return result;
    }

    result.status = LpStatus::Optimal;
    result.x.assign(n, Rational(0));
    for (std::size_t i = 0; i < rows; ++i) result.x[t.basis[i]] = t.tab[i][t.rhs];
    result.objective = -t.tab[rows][t.rhs];
    return result;
}

}  // namespace torickit
