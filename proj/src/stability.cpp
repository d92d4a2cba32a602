#include "torickit/stability.hpp"

#include "torickit/error.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <tuple>

namespace torickit {

std::string to_string(EquivalenceKind kind) {
    return kind == EquivalenceKind::Homotopy ? "HOMOTOPY" : "HOMOLOGY";
}

std::string StabilityReport::statement() const {
    return std::string("inclusion is a ") + (kind == EquivalenceKind::Homotopy ? "homotopy" : "homology") +
           " equivalence through dimension " + std::to_string(stability_dim);
}

long stability_dimension(long r_min, long d_min) { return (2 * r_min - 3) * d_min - 2; }

void require_standing_conditions(const Fan& f) {
    const auto validation = validate_fan(f);
    if (!validation.valid())
        throw Error(ErrorCode::InvalidFan, "fan violates " + to_string(validation.violations.front().axiom));
    if (!is_smooth(f)) throw Error(ErrorCode::NotSmooth, "fan has a non-smooth cone");
    const auto cox = cox_report(f);
    if (!cox.condition_span) throw Error(ErrorCode::Condition1Failed, "rays do not span Z^n over Z");
    if (!cox.condition_positive_degree)
        throw Error(ErrorCode::Condition2Failed, "no positive integers d_k satisfy sum d_k n_k = 0");
    r_min(f);
}

StabilityReport stability_report(const Fan& f, const DegreeVector& d) {
    require_standing_conditions(f);
    degree_of(f, d.entries());

    StabilityReport report;
    report.r_min = static_cast<long>(r_min(f));
    report.d_min = d.d_min().get_si();
    report.stability_dim = stability_dimension(report.r_min, report.d_min);
    report.kind = report.r_min >= 3 ? EquivalenceKind::Homotopy : EquivalenceKind::Homology;
    report.connectivity = 2 * (report.r_min - 2);
    report.vanishing_line = (2 * report.r_min - 2) * report.d_min - 1;
    report.oracle_dim = stable_range_replay(report.r_min, report.d_min);
    return report;
}

DiscriminantDims discriminant_dims(const Fan& f, const DegreeVector& d, long k) {
    degree_of(f, d.entries());
    if (k < 1 || Integer(k) > d.d_min())
        throw Error(ErrorCode::KOutOfRange, "k = " + std::to_string(k) + " outside [1, d_min]");
    const Integer r = static_cast<long>(f.ray_count());
    const Integer rm = static_cast<long>(r_min(f));
    DiscriminantDims dims;
    dims.N_D = d.total();
    dims.dim_L = 2 * (r - rm);
    dims.dim_C_k = 2 * (1 + r - rm) * k;
    dims.bundle_rank_l = 2 * dims.N_D - 2 * r * k + k - 1;
    dims.stratum_dim = dims.bundle_rank_l + dims.dim_C_k;
    return dims;
}

// The E^1 terms agree for 0 <= k <= d_min and vanish for k >= d_min + 2;
// on the column k = d_min + 1 they vanish below s = (2 r_min - 2) d_min.
// The seed S_1 is the rest of that column. A differential d^t out of an
// unknown position (u + t, v + t - 1) can spoil (u, v); chaining these
// shifts with strictly increasing lengths l_1 < ... < l_t gives A_t.
ReplayResult replay_spectral_regions(long r_min, long d_min) {
    const long seed_s = (2 * r_min - 2) * d_min;
    const long top = d_min + 1;
    // Window: any A_t point has v >= seed_s - (d_min + 1) >= 0, and only the
    // lowest v in each column matters, so a few rows above seed_s suffice.
    const long s_max = seed_s + d_min + 4;

    ReplayResult result;
    result.seed_min = seed_s - top;

    // Closed form. sum l_j <= d_min + 1 with l_j strictly increasing bounds
    // t by t (t + 1) / 2 <= d_min + 1.
    std::vector<std::vector<std::vector<bool>>> in_a;  // [t][u][v]
    auto mark = [&](std::size_t t, long sum_l) {
        if (in_a.size() <= t)
            in_a.resize(t + 1, std::vector<std::vector<bool>>(static_cast<std::size_t>(top),
                                                              std::vector<bool>(static_cast<std::size_t>(s_max + 1))));
        const long u = top - sum_l;
        const long v_min = seed_s - (sum_l - static_cast<long>(t));
        for (long v = std::max(0L, v_min); v <= s_max; ++v)
            in_a[t][static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
    };
    std::function<void(long, std::size_t, long)> extend = [&](long last, std::size_t t, long sum) {
        for (long l = last + 1; sum + l <= top; ++l) {
            mark(t + 1, sum + l);
            extend(l, t + 1, sum + l);
        }
    };
    extend(0, 0, 0);

    result.min_a = std::numeric_limits<long>::max();
    result.a_by_t.assign(in_a.empty() ? 0 : in_a.size() - 1, std::nullopt);
    for (std::size_t t = 1; t < in_a.size(); ++t) {
        std::optional<long> a;
        for (long u = 0; u < top; ++u)
            for (long v = 0; v <= s_max; ++v)
                if (in_a[t][static_cast<std::size_t>(u)][static_cast<std::size_t>(v)])
                    a = std::min(a.value_or(v - u), v - u);
        result.a_by_t[t - 1] = a;
        if (a) result.min_a = std::min(result.min_a, *a);
    }

    // Recursive propagation: S_t = {(u, v) : (u + t - 1, v + t - 2) in S_1 ∪ ... ∪ S_{t-1}}.
    std::map<std::tuple<long, long, long>, bool> memo;
    std::function<bool(long, long, long)> in_s = [&](long t, long u, long v) -> bool {
        if (u > top) return false;
        if (t == 1) return u == top && v >= seed_s;
        auto key = std::make_tuple(t, u, v);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        bool hit = false;
        for (long j = 1; j < t && !hit; ++j) hit = in_s(j, u + t - 1, v + t - 2);
        memo[key] = hit;
        return hit;
    };
    bool agree = true;
    for (long u = 0; u < top; ++u)
        for (long v = 0; v <= s_max; ++v) {
            bool recursive = false;
            for (long t = 2; t <= top + 1 && !recursive; ++t) recursive = in_s(t, u, v);
            bool closed = false;
            for (std::size_t t = 1; t < in_a.size() && !closed; ++t)
                closed = in_a[t][static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
            if (recursive != closed) agree = false;
        }
    result.recursion_matches_closed_form = agree;

    // Isomorphism holds strictly below the first unknown total degree in each
    // range of k; combine the k = d_min + 1 column with the A_t bound.
    long range = result.seed_min - 1;
    if (result.min_a != std::numeric_limits<long>::max()) range = std::min(range, result.min_a - 2);
    result.stability_dim = range;
    return result;
}

long stable_range_replay(long r_min, long d_min) { return replay_spectral_regions(r_min, d_min).stability_dim; }

}  // namespace torickit
