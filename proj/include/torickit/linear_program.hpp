#pragma once

#include "torickit/integer_matrix.hpp"

#include <vector>

namespace torickit {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    RationalVector x;  // optimal vertex when status == Optimal
    Rational objective;
};

/// Exact two-phase simplex with Bland's rule for
///   minimize c.x  subject to  A x = b, x >= 0.
/// Rows of A need not be independent.
LpResult minimize_standard_form(const std::vector<RationalVector>& a, const RationalVector& b,
                                const RationalVector& c);

}  // namespace torickit
