#pragma once

#include "torickit/integer_matrix.hpp"

#include <compare>
#include <cstddef>
#include <vector>

namespace torickit {

/// Nonzero primitive integer vector: the generator of a rational ray.
class LatticeVector {
public:
    const IntVector& coords() const noexcept { return coords_; }
    std::size_t dimension() const noexcept { return coords_.size(); }
    const Integer& operator[](std::size_t i) const { return coords_[i]; }

    friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
    friend std::strong_ordering operator<=>(const LatticeVector& a, const LatticeVector& b);

private:
    explicit LatticeVector(IntVector coords) : coords_(std::move(coords)) {}
    friend LatticeVector primitivize(const IntVector& v);

    IntVector coords_;
};

/// v divided by the gcd of its entries. Throws ZeroVector.
LatticeVector primitivize(const IntVector& v);

/// Cone spanned by linearly independent primitive generators. Generators are
/// kept sorted so that equal cones compare equal. Strong convexity follows
/// from independence.
class SimplicialCone {
public:
    /// Zero cone in R^n.
    explicit SimplicialCone(std::size_t ambient_dim);
    /// Throws IndependenceViolation for dependent or repeated generators and
    /// DimensionMismatch for generators outside R^n.
    SimplicialCone(std::size_t ambient_dim, std::vector<LatticeVector> generators);

    std::size_t ambient_dim() const noexcept { return ambient_dim_; }
    std::size_t dimension() const noexcept { return generators_.size(); }
    const std::vector<LatticeVector>& generators() const noexcept { return generators_; }

    /// n x s matrix with the generators as columns.
    IntegerMatrix generator_matrix() const;

    friend bool operator==(const SimplicialCone&, const SimplicialCone&) = default;

private:
    std::size_t ambient_dim_;
    std::vector<LatticeVector> generators_;
};

/// Inequalities F x >= 0 and equations E x = 0 cutting out a simplicial cone.
struct HalfSpaceDescription {
    std::vector<RationalVector> inequalities;
    std::vector<RationalVector> equations;
};

HalfSpaceDescription half_space_description(const SimplicialCone& c);

/// Generators extend to a Z-basis of Z^n.
bool is_smooth_cone(const SimplicialCone& c);

bool cone_contains(const SimplicialCone& c, const RationalVector& p);

/// Extreme rays of a ∩ b as primitive integer vectors, sorted.
std::vector<IntVector> intersection_extreme_rays(const SimplicialCone& a, const SimplicialCone& b);

/// a ∩ b equals `shared` as a point set.
bool intersection_is_common_face(const SimplicialCone& a, const SimplicialCone& b,
                                 const SimplicialCone& shared);

RationalVector to_rational(const IntVector& v);

}  // namespace torickit
