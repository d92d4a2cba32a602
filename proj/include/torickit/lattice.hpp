#pragma once

#include "torickit/integer_matrix.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace torickit {

/// U * A * V == S, with U, V unimodular and S diagonal. The nonzero diagonal
/// entries are positive and each divides the next.
struct SmithDecomposition {
    IntegerMatrix U;
    IntegerMatrix S;
    IntegerMatrix V;

    /// The diagonal of S (length min(rows, cols)).
    IntVector diagonal() const;
    std::size_t rank() const;
};

SmithDecomposition smith_normal_form(const IntegerMatrix& a);

/// Row-style Hermite normal form: nonzero rows first, positive pivots with
/// strictly increasing pivot columns, entries above a pivot reduced into
/// [0, pivot). Zero rows are dropped.
IntegerMatrix hermite_normal_form(const IntegerMatrix& a);

std::size_t rank(const IntegerMatrix& a);

/// True iff the integer span of `generators` is all of Z^n.
bool spans_lattice(const std::vector<IntVector>& generators, std::size_t n);

/// Saturated basis of {v in Z^cols : N v = 0}, in Hermite normal form.
std::vector<IntVector> kernel_basis(const IntegerMatrix& n);

/// Some integer D with N D = 0 and every entry >= 1. The returned vector is
/// the denominator-cleared optimum of min sum(x) over {N x = 0, x >= 1}.
std::optional<IntVector> positive_kernel_vector(const IntegerMatrix& n);

/// The unique kernel vector of N whose entries at the keys of `partial`
/// (0-based) equal the mapped values. Throws Underdetermined, Inconsistent,
/// NonIntegral or NonPositive.
IntVector complete_degrees(const IntegerMatrix& n, const std::map<std::size_t, Integer>& partial);

/// Solution set of A x = b over Q, as a particular solution plus a basis of
/// the homogeneous solutions. Empty optional when inconsistent.
struct RationalSolution {
    RationalVector particular;
    std::vector<RationalVector> nullspace;
};
std::optional<RationalSolution> solve_rational(const std::vector<RationalVector>& a,
                                               const RationalVector& b, std::size_t cols);

/// Inverse of a unimodular matrix. Throws NonIntegral otherwise.
IntegerMatrix unimodular_inverse(const IntegerMatrix& u);

/// Scale a rational vector by the lcm of its denominators.
IntVector clear_denominators(const RationalVector& v);

}  // namespace torickit
