#pragma once

#include "torickit/cox.hpp"
#include "torickit/fan.hpp"

#include <optional>
#include <string>
#include <vector>

namespace torickit {

enum class EquivalenceKind { Homotopy, Homology };

std::string to_string(EquivalenceKind kind);

struct StabilityReport {
    long r_min = 0;
    long d_min = 0;
    long stability_dim = 0;   // (2 r_min - 3) d_min - 2
    EquivalenceKind kind = EquivalenceKind::Homology;
    long connectivity = 0;    // 2 (r_min - 2)
    long vanishing_line = 0;  // (2 r_min - 2) d_min - 1
    long oracle_dim = 0;      // from replay_spectral_regions

    /// "inclusion is a homotopy equivalence through dimension N"
    std::string statement() const;
};

/// Closed-form stability dimension.
long stability_dimension(long r_min, long d_min);

/// Throws InvalidFan, NotSmooth, Condition1Failed, Condition2Failed or
/// NoPrimitiveCollection, in that order of checking.
void require_standing_conditions(const Fan& f);

/// Checks require_standing_conditions(f) and that d belongs to f.
StabilityReport stability_report(const Fan& f, const DegreeVector& d);

struct DiscriminantDims {
    Integer dim_L;          // 2 (r - r_min)
    Integer dim_C_k;        // 2 (1 + r - r_min) k
    Integer bundle_rank_l;  // 2 N(D) - 2 r k + k - 1
    Integer N_D;
    /// bundle_rank_l + dim_C_k; equals 2 N(D) + 3k - 2 r_min k - 1.
    Integer stratum_dim;
};

/// Requires 1 <= k <= d_min; throws KOutOfRange otherwise.
DiscriminantDims discriminant_dims(const Fan& f, const DegreeVector& d, long k);

/// Index-region bookkeeping for the comparison of truncated spectral
/// sequences. Positions are (k, s) with k the filtration degree; a position
/// is "unknown" when the E^1 terms there are not known to agree.
struct ReplayResult {
    long stability_dim = 0;
    /// min over nonempty A_t of min{s - k : (k, s) in A_t}.
    long min_a = 0;
    /// a(t) for t = 1, 2, ...; nullopt where A_t is empty in range.
    std::vector<std::optional<long>> a_by_t;
    /// min{s - k} over the seed region {(d_min + 1, s) : s >= (2 r_min - 2) d_min}.
    long seed_min = 0;
    /// The recursive S_t propagation and the closed-form A_t union agree on
    /// the enumeration window.
    bool recursion_matches_closed_form = false;
};

ReplayResult replay_spectral_regions(long r_min, long d_min);

/// replay_spectral_regions(r_min, d_min).stability_dim
long stable_range_replay(long r_min, long d_min);

}  // namespace torickit
