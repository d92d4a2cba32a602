#pragma once

// Independent reference computations for the test suites. Nothing here calls
// into the library routines it is used to check.

#include "torickit/integer_matrix.hpp"
#include "torickit/polynomial.hpp"

#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

namespace oracle {

using Small = std::vector<std::vector<long>>;

inline torickit::IntegerMatrix to_matrix(const Small& a, std::size_t cols) {
    torickit::IntegerMatrix m(a.size(), cols);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = a[i][j];
    return m;
}

inline Small random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, long bound) {
    std::uniform_int_distribution<long> dist(-bound, bound);
    Small a(rows, std::vector<long>(cols));
    for (auto& row : a)
        for (auto& x : row) x = dist(rng);
    return a;
}

/// Laplace expansion; fine for the <= 5x5 matrices used in tests.
inline torickit::Integer laplace_det(const std::vector<std::vector<torickit::Integer>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    torickit::Integer total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c] == 0) continue;
        std::vector<std::vector<torickit::Integer>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<torickit::Integer> row;
            for (std::size_t j = 0; j < n; ++j)
                if (j != c) row.push_back(m[i][j]);
            minor.push_back(row);
        }
        torickit::Integer term = m[0][c] * laplace_det(minor);
        total += (c % 2 == 0) ? term : torickit::Integer(-term);
    }
    return total;
}

inline void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
    std::vector<std::size_t> idx(k);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
        if (pos == k) {
            f(idx);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            idx[pos] = i;
            rec(pos + 1, i + 1);
        }
    };
    rec(0, 0);
}

/// k-th determinantal divisor: gcd of all k x k minors (0 if all vanish).
inline torickit::Integer determinantal_divisor(const Small& a, std::size_t cols, std::size_t k) {
    torickit::Integer g = 0;
    for_each_subset(a.size(), k, [&](const std::vector<std::size_t>& rows) {
        for_each_subset(cols, k, [&](const std::vector<std::size_t>& cs) {
            std::vector<std::vector<torickit::Integer>> m;
            for (auto i : rows) {
                std::vector<torickit::Integer> row;
                for (auto j : cs) row.emplace_back(a[i][j]);
                m.push_back(row);
            }
            torickit::Integer d = laplace_det(m);
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
        });
    });
    return g;
}

/// Calls f on every integer vector in [lo, hi]^n.
inline void for_each_box_vector(std::size_t n, long lo, long hi, const std::function<bool(const std::vector<long>&)>& f) {
    std::vector<long> v(n, lo);
    if (n == 0) {
        f(v);
        return;
    }
    for (;;) {
        if (!f(v)) return;
        std::size_t i = 0;
        while (i < n && v[i] == hi) v[i++] = lo;
        if (i == n) return;
        ++v[i];
    }
}

inline bool in_kernel(const Small& a, const std::vector<long>& v) {
    for (const auto& row : a) {
        long s = 0;
        for (std::size_t j = 0; j < v.size(); ++j) s += row[j] * v[j];
        if (s != 0) return false;
    }
    return true;
}

/// All nonzero kernel vectors in [-bound, bound]^cols.
inline std::vector<std::vector<long>> kernel_vectors(const Small& a, std::size_t cols, long bound) {
    std::vector<std::vector<long>> out;
    for_each_box_vector(cols, -bound, bound, [&](const std::vector<long>& v) {
        if (std::any_of(v.begin(), v.end(), [](long x) { return x != 0; }) && in_kernel(a, v)) out.push_back(v);
        return true;
    });
    return out;
}

/// Some kernel vector in [1, bound]^cols, if any.
inline std::optional<std::vector<long>> positive_kernel_search(const Small& a, std::size_t cols, long bound) {
    std::optional<std::vector<long>> found;
    for_each_box_vector(cols, 1, bound, [&](const std::vector<long>& v) {
        if (in_kernel(a, v)) {
            found = v;
            return false;
        }
        return true;
    });
    return found;
}

// ------------------------------------------------------ polynomial oracles

using torickit::GaussianRational;
using torickit::Polynomial;

/// Determinant over Q(i) by plain Gaussian elimination.
inline GaussianRational field_det(std::vector<std::vector<GaussianRational>> m) {
    const std::size_t n = m.size();
    GaussianRational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c].is_zero()) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c].is_zero()) continue;
            GaussianRational f = m[i][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return det;
}

/// Sylvester resultant of f (degree exactly df >= 1, nonzero leading
/// coefficient) and g taken with formal degree dg.
inline GaussianRational resultant(const std::vector<GaussianRational>& f, const std::vector<GaussianRational>& g) {
    const std::size_t df = f.size() - 1;
    const std::size_t dg = g.size() - 1;
    const std::size_t n = df + dg;
    if (n == 0) return 1;
    std::vector<std::vector<GaussianRational>> s(n, std::vector<GaussianRational>(n));
    for (std::size_t i = 0; i < dg; ++i)
        for (std::size_t j = 0; j <= df; ++j) s[i][i + j] = f[df - j];
    for (std::size_t i = 0; i < df; ++i)
        for (std::size_t j = 0; j <= dg; ++j) s[dg + i][i + j] = g[dg - j];
    return field_det(s);
}

/// Common root of all the given polynomials (first one monic of degree >= 1):
/// Res_z(p_0, sum_j t^j p_{j+1}) vanishes identically in t, tested at enough
/// values of t to pin down a polynomial of its degree.
inline bool share_root(const std::vector<Polynomial>& polys) {
    if (polys.front().degree() < 1) return false;
    const auto& f = polys.front().coefficients();
    const std::size_t rest = polys.size() - 1;
    if (rest == 0) return polys.front().degree() > 0;
    std::size_t formal = 0;
    for (std::size_t j = 1; j < polys.size(); ++j)
        formal = std::max<std::size_t>(formal, polys[j].coefficients().size() - 1);
    const std::size_t samples = (f.size() - 1) * (rest - 1) + 1;
    for (std::size_t s = 0; s < samples; ++s) {
        std::vector<GaussianRational> g(formal + 1);
        GaussianRational tp = 1;
        for (std::size_t j = 1; j < polys.size(); ++j) {
            const auto& c = polys[j].coefficients();
            for (std::size_t k = 0; k < c.size(); ++k) g[k] += tp * c[k];
            tp *= GaussianRational(static_cast<long>(s));
        }
        if (!resultant(f, g).is_zero()) return false;
    }
    return true;
}

}  // namespace oracle
