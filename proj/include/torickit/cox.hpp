#pragma once

#include "torickit/fan.hpp"
#include "torickit/integer_matrix.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace torickit {

/// Positive integer r-tuple D with sum d_k n_k = 0 for its fan.
class DegreeVector {
public:
    const IntVector& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    const Integer& operator[](std::size_t i) const { return entries_[i]; }

    Integer d_min() const;
    /// N(D) = d_1 + ... + d_r.
    Integer total() const;

    friend bool operator==(const DegreeVector&, const DegreeVector&) = default;

private:
    explicit DegreeVector(IntVector entries) : entries_(std::move(entries)) {}
    friend DegreeVector degree_of(const Fan& f, const IntVector& d);

    IntVector entries_;
};

/// Throws DegreeMismatch (wrong length), NonPositive, NotInKernel.
DegreeVector degree_of(const Fan& f, const IntVector& d);

/// Character data of G_Σ and the two standing conditions on the fan.
struct CoxGroupReport {
    std::size_t free_rank = 0;           // r - rank(N)
    IntVector finite_part;               // elementary divisors > 1
    bool condition_span = false;         // rays span Z^n
    bool condition_positive_degree = false;
    std::optional<DegreeVector> witness_degree;
    std::optional<std::size_t> pi2_rank;  // only when condition_span holds
    std::vector<IntVector> kernel_basis;
};

CoxGroupReport cox_report(const Fan& f);

}  // namespace torickit
