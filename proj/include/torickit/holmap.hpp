#pragma once

#include "torickit/cox.hpp"
#include "torickit/fan.hpp"
#include "torickit/polynomial.hpp"

#include <map>
#include <optional>
#include <vector>

namespace torickit {

/// r monic polynomials; degree D = (deg f_1, ..., deg f_r). Represents a
/// based holomorphic map S^2 -> X_Σ once D is validated against a fan and
/// no primitive collection has a common root.
class PolyTuple {
public:
    /// Throws DegreeMismatch if a polynomial is not monic.
    explicit PolyTuple(std::vector<Polynomial> polys);

    const std::vector<Polynomial>& polys() const noexcept { return polys_; }
    std::size_t size() const noexcept { return polys_.size(); }
    const Polynomial& operator[](std::size_t i) const { return polys_[i]; }
    IntVector degrees() const;

    friend bool operator==(const PolyTuple&, const PolyTuple&) = default;

private:
    std::vector<Polynomial> polys_;
};

/// Root multisets ξ_1, ..., ξ_r (point -> multiplicity >= 1).
using PointMultiset = std::map<GaussianRational, unsigned>;

class Configuration {
public:
    Configuration() = default;
    explicit Configuration(std::vector<PointMultiset> parts);

    const std::vector<PointMultiset>& parts() const noexcept { return parts_; }
    std::size_t size() const noexcept { return parts_.size(); }
    /// Multiplicity sums per part.
    IntVector degrees() const;
    std::size_t point_count() const;

    friend bool operator==(const Configuration&, const Configuration&) = default;

private:
    std::vector<PointMultiset> parts_;
};

struct MembershipResult {
    bool member = true;
    /// First primitive collection (in sorted order) whose members share a root.
    std::optional<IndexSet> witness;
    /// Monic gcd over the witness collection.
    Polynomial common_factor;
};

/// Gcd test over every primitive collection. Throws DegreeMismatch when the
/// tuple's degrees are not a DegreeVector of f.
MembershipResult check_membership(const PolyTuple& t, const Fan& f);
bool is_member(const PolyTuple& t, const Fan& f);

/// Throws SizeMismatch when multiplicities are not a DegreeVector of f.
bool config_is_member(const Configuration& c, const Fan& f);

PolyTuple config_to_polytuple(const Configuration& c);

struct EvaluationResult {
    std::vector<GaussianRational> point;
    std::vector<IndexSet> violated_collections;
    bool in_U_K() const noexcept { return violated_collections.empty(); }
};

EvaluationResult evaluate(const PolyTuple& t, const Fan& f, const GaussianRational& alpha);

struct StabilizationResult {
    PolyTuple tuple;
    bool member = false;
    std::vector<GaussianRational> points;
};

/// x_j = N(D) + j/(r+1) for j = 1..r.
std::vector<GaussianRational> default_stabilization_points(const PolyTuple& t);

/// f_i -> f_i (z - x_i)^{a_i}; membership of the result is re-verified.
/// Throws NonKernelIncrement, DuplicatePoints, DegreeMismatch.
StabilizationResult stabilize(const PolyTuple& t, const Fan& f, const IntVector& increment,
                              std::optional<std::vector<GaussianRational>> points = std::nullopt);

/// Points with |x - w| < eps0, recentred to (x - w)/eps0. Points on the
/// boundary circle are dropped.
Configuration scanning_snapshot(const Configuration& c, const GaussianRational& w, const Rational& eps0);

}  // namespace torickit
