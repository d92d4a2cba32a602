#include "torickit/cox.hpp"

#include "torickit/error.hpp"
#include "torickit/lattice.hpp"

#include <algorithm>

namespace torickit {

Integer DegreeVector::d_min() const { return *std::min_element(entries_.begin(), entries_.end()); }

Integer DegreeVector::total() const {
    Integer s = 0;
    for (const auto& d : entries_) s += d;
    return s;
}

DegreeVector degree_of(const Fan& f, const IntVector& d) {
    if (d.size() != f.ray_count())
        throw Error(ErrorCode::DegreeMismatch, "expected " + std::to_string(f.ray_count()) +
                                                   " degrees, got " + std::to_string(d.size()));
    for (std::size_t k = 0; k < d.size(); ++k)
        if (d[k] < 1)
            throw Error(ErrorCode::NonPositive,
                        "degree d_" + std::to_string(k + 1) + " = " + d[k].get_str() + " is not positive");
    const IntVector image = f.generator_matrix().apply(d);
    if (std::any_of(image.begin(), image.end(), [](const Integer& x) { return x != 0; }))
        throw Error(ErrorCode::NotInKernel, "sum d_k n_k = " + to_string(image) + " is not zero");
    return DegreeVector(d);
}

CoxGroupReport cox_report(const Fan& f) {
    const IntegerMatrix n = f.generator_matrix();
    const auto snf = smith_normal_form(n);
    CoxGroupReport report;
    const std::size_t rk = snf.rank();
    report.free_rank = f.ray_count() - rk;
    for (const auto& d : snf.diagonal())
        if (d > 1) report.finite_part.push_back(d);
    report.condition_span = rk == f.dimension() && report.finite_part.empty();
    if (report.condition_span) report.pi2_rank = report.free_rank;
    report.kernel_basis = kernel_basis(n);
    if (auto w = positive_kernel_vector(n)) {
        report.condition_positive_degree = true;
        report.witness_degree = degree_of(f, *w);
    }
    return report;
}

}  // namespace torickit
