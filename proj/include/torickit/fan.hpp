#pragma once

#include "torickit/cone.hpp"
#include "torickit/integer_matrix.hpp"

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace torickit {

inline constexpr std::size_t kMaxRays = 64;
inline constexpr std::size_t kMaterializeLimit = 20;

/// Subset of the ray indices {0, ..., r-1}.
class IndexSet {
public:
    constexpr IndexSet() = default;
    constexpr explicit IndexSet(std::uint64_t bits) : bits_(bits) {}
    IndexSet(std::initializer_list<std::size_t> indices);
    static IndexSet from_indices(const std::vector<std::size_t>& indices);
    static constexpr IndexSet full(std::size_t r) {
        return IndexSet(r >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << r) - 1);
    }

    constexpr std::uint64_t bits() const noexcept { return bits_; }
    constexpr std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
    constexpr bool empty() const noexcept { return bits_ == 0; }
    constexpr bool contains(std::size_t i) const noexcept { return (bits_ >> i) & 1U; }
    constexpr bool is_subset_of(IndexSet other) const noexcept { return (bits_ & ~other.bits_) == 0; }

    constexpr IndexSet with(std::size_t i) const noexcept { return IndexSet(bits_ | (std::uint64_t{1} << i)); }
    constexpr IndexSet without(std::size_t i) const noexcept { return IndexSet(bits_ & ~(std::uint64_t{1} << i)); }
    constexpr IndexSet operator&(IndexSet o) const noexcept { return IndexSet(bits_ & o.bits_); }
    constexpr IndexSet operator|(IndexSet o) const noexcept { return IndexSet(bits_ | o.bits_); }

    std::vector<std::size_t> indices() const;
    /// "{1,3}" with 1-based indices.
    std::string to_string() const;

    friend constexpr bool operator==(IndexSet, IndexSet) = default;
    /// Orders by cardinality, then lexicographically by sorted index list.
    friend std::strong_ordering operator<=>(IndexSet a, IndexSet b);

private:
    std::uint64_t bits_ = 0;
};

/// A fan as the pair (ray generators, underlying simplicial complex). The
/// complex is stored as given; validate_fan() checks the fan axioms.
class Fan {
public:
    Fan(std::size_t dimension, std::vector<LatticeVector> generators, std::set<IndexSet> complex);

    /// Complex = downward closure of `maximal_cones`, plus ∅ and every singleton.
    static Fan from_maximal_cones(std::size_t dimension, std::vector<LatticeVector> generators,
                                  const std::vector<IndexSet>& maximal_cones);

    std::size_t dimension() const noexcept { return dimension_; }
    std::size_t ray_count() const noexcept { return generators_.size(); }
    const std::vector<LatticeVector>& generators() const noexcept { return generators_; }
    const std::set<IndexSet>& complex() const noexcept { return complex_; }

    bool is_face(IndexSet s) const { return complex_.contains(s); }
    std::vector<IndexSet> maximal_faces() const;
    SimplicialCone cone(IndexSet s) const;
    /// n x r matrix whose columns are the generators.
    IntegerMatrix generator_matrix() const;

    friend bool operator==(const Fan&, const Fan&) = default;

private:
    std::size_t dimension_;
    std::vector<LatticeVector> generators_;
    std::set<IndexSet> complex_;
};

enum class FanAxiom {
    RayLimit,
    GeneratorDimension,
    DistinctGenerators,
    ContainsEmptyFace,
    DownwardClosure,
    RayCoverage,
    NontrivialFan,
    Simpliciality,
    Intersection,
};

std::string to_string(FanAxiom axiom);

struct Violation {
    FanAxiom axiom;
    std::vector<IndexSet> witness;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool valid() const noexcept { return violations.empty(); }
};

ValidationReport validate_fan(const Fan& f);

/// I(K): all subsets of [r] that are not faces. Throws RLimitExceeded when
/// r exceeds kMaterializeLimit; use is_nonface() beyond that.
std::vector<IndexSet> nonface_family(const Fan& f);
bool is_nonface(const Fan& f, IndexSet s);

/// Minimal non-faces, sorted.
std::vector<IndexSet> primitive_collections(const Fan& f);

/// Minimum size of a primitive collection. Throws NoPrimitiveCollection.
std::size_t r_min(const Fan& f);

bool is_smooth(const Fan& f);
bool is_complete(const Fan& f);

/// All fans on the same rays whose complex is a proper downward-closed
/// subfamily of K containing every singleton.
std::vector<Fan> enumerate_subfans(const Fan& f);

struct FanIsomorphism {
    IntegerMatrix matrix;                // U with U * a_k = b_{permutation[k]}
    std::vector<std::size_t> permutation;
};

std::optional<FanIsomorphism> fan_isomorphism(const Fan& a, const Fan& b);

}  // namespace torickit
