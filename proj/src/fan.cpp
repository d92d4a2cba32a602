#include "torickit/fan.hpp"

#include "torickit/error.hpp"
#include "torickit/lattice.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace torickit {

// ---------------------------------------------------------------- IndexSet

IndexSet::IndexSet(std::initializer_list<std::size_t> indices) {
    for (auto i : indices) bits_ |= std::uint64_t{1} << i;
}

IndexSet IndexSet::from_indices(const std::vector<std::size_t>& indices) {
    IndexSet s;
    for (auto i : indices) {
        if (i >= kMaxRays) throw Error(ErrorCode::RLimitExceeded, "ray index beyond 64");
        s = s.with(i);
    }
    return s;
}

std::vector<std::size_t> IndexSet::indices() const {
    std::vector<std::size_t> out;
    for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    return out;
}

std::string IndexSet::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (auto i : indices()) {
        if (!first) os << ',';
        os << i + 1;
        first = false;
    }
    os << '}';
    return os.str();
}

std::strong_ordering operator<=>(IndexSet a, IndexSet b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    auto ia = a.indices();
    auto ib = b.indices();
    return std::lexicographical_compare_three_way(ia.begin(), ia.end(), ib.begin(), ib.end());
}

// --------------------------------------------------------------------- Fan

Fan::Fan(std::size_t dimension, std::vector<LatticeVector> generators, std::set<IndexSet> complex)
    : dimension_(dimension), generators_(std::move(generators)), complex_(std::move(complex)) {
    if (generators_.size() > kMaxRays)
        throw Error(ErrorCode::RLimitExceeded, "at most 64 rays are supported");
    const IndexSet all = IndexSet::full(generators_.size());
    for (auto s : complex_)
        if (!s.is_subset_of(all))
            throw Error(ErrorCode::IndexOutOfRange, "face " + s.to_string() + " refers to a missing ray");
}

Fan Fan::from_maximal_cones(std::size_t dimension, std::vector<LatticeVector> generators,
                            const std::vector<IndexSet>& maximal_cones) {
    std::set<IndexSet> complex{IndexSet{}};
    for (std::size_t k = 0; k < generators.size(); ++k) complex.insert(IndexSet{k});
    for (auto m : maximal_cones) {
        // every subset of m, by submask enumeration
        const std::uint64_t bits = m.bits();
        for (std::uint64_t sub = bits;; sub = (sub - 1) & bits) {
            complex.insert(IndexSet(sub));
            if (sub == 0) break;
        }
    }
    return Fan(dimension, std::move(generators), std::move(complex));
}

std::vector<IndexSet> Fan::maximal_faces() const {
    std::vector<IndexSet> out;
    for (auto s : complex_) {
        bool maximal = true;
        for (std::size_t k = 0; k < generators_.size() && maximal; ++k)
            if (!s.contains(k) && complex_.contains(s.with(k))) maximal = false;
        if (maximal) out.push_back(s);
    }
    return out;
}

SimplicialCone Fan::cone(IndexSet s) const {
    std::vector<LatticeVector> gens;
    for (auto i : s.indices()) gens.push_back(generators_.at(i));
    return SimplicialCone(dimension_, std::move(gens));
}

IntegerMatrix Fan::generator_matrix() const {
    IntegerMatrix m(dimension_, generators_.size());
    for (std::size_t j = 0; j < generators_.size(); ++j)
        for (std::size_t i = 0; i < dimension_; ++i) m(i, j) = generators_[j][i];
    return m;
}

// -------------------------------------------------------------- validation

std::string to_string(FanAxiom axiom) {
    switch (axiom) {
    case FanAxiom::RayLimit: return "RAY_LIMIT";
    case FanAxiom::GeneratorDimension: return "GENERATOR_DIMENSION";
    case FanAxiom::DistinctGenerators: return "DISTINCT_GENERATORS";
    case FanAxiom::ContainsEmptyFace: return "CONTAINS_EMPTY_FACE";
    case FanAxiom::DownwardClosure: return "DOWNWARD_CLOSURE";
    case FanAxiom::RayCoverage: return "RAY_COVERAGE";
    case FanAxiom::NontrivialFan: return "NONTRIVIAL_FAN";
    case FanAxiom::Simpliciality: return "SIMPLICIALITY";
    case FanAxiom::Intersection: return "INTERSECTION";
    }
    return "UNKNOWN";
}

ValidationReport validate_fan(const Fan& f) {
    ValidationReport report;
    auto fail = [&](FanAxiom a, std::vector<IndexSet> w) { report.violations.push_back({a, std::move(w)}); };
    const std::size_t r = f.ray_count();
    const auto& gens = f.generators();
    const auto& complex = f.complex();

    bool dims_ok = true;
    for (std::size_t k = 0; k < r; ++k)
        if (gens[k].dimension() != f.dimension()) {
            fail(FanAxiom::GeneratorDimension, {IndexSet{k}});
            dims_ok = false;
        }
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j)
            if (gens[i] == gens[j]) fail(FanAxiom::DistinctGenerators, {IndexSet{i, j}});

    if (!complex.contains(IndexSet{})) fail(FanAxiom::ContainsEmptyFace, {});
    for (auto s : complex)
        for (auto i : s.indices())
            if (!complex.contains(s.without(i))) fail(FanAxiom::DownwardClosure, {s, s.without(i)});
    for (std::size_t k = 0; k < r; ++k)
        if (!complex.contains(IndexSet{k})) fail(FanAxiom::RayCoverage, {IndexSet{k}});
    if (std::none_of(complex.begin(), complex.end(), [](IndexSet s) { return !s.empty(); }))
        fail(FanAxiom::NontrivialFan, {});

    if (!dims_ok) return report;

    // Faces of a simplicial cone are simplicial, so maximal faces suffice.
    std::vector<std::pair<IndexSet, SimplicialCone>> cones;
    for (auto m : f.maximal_faces()) {
        try {
            cones.emplace_back(m, f.cone(m));
        } catch (const Error& e) {
            if (e.code() != ErrorCode::IndependenceViolation) throw;
            fail(FanAxiom::Simpliciality, {m});
        }
    }
    for (std::size_t i = 0; i < cones.size(); ++i)
        for (std::size_t j = i + 1; j < cones.size(); ++j) {
            const auto shared = cones[i].first & cones[j].first;
            if (!intersection_is_common_face(cones[i].second, cones[j].second, f.cone(shared)))
                fail(FanAxiom::Intersection, {cones[i].first, cones[j].first});
        }
    return report;
}

// ------------------------------------------------------ non-faces and r_min

bool is_nonface(const Fan& f, IndexSet s) { return !f.is_face(s); }

std::vector<IndexSet> nonface_family(const Fan& f) {
    const std::size_t r = f.ray_count();
    if (r > kMaterializeLimit)
        throw Error(ErrorCode::RLimitExceeded, "non-face family is only materialized for r <= 20");
    std::vector<IndexSet> out;
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << r); ++b)
        if (!f.is_face(IndexSet(b))) out.push_back(IndexSet(b));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<IndexSet> primitive_collections(const Fan& f) {
    // A minimal non-face S satisfies S \ {i} ∈ K for each i ∈ S, so every one
    // arises as σ ∪ {i} for some face σ.
    std::set<IndexSet> out;
    for (auto sigma : f.complex())
        for (std::size_t i = 0; i < f.ray_count(); ++i) {
            if (sigma.contains(i)) continue;
            const IndexSet s = sigma.with(i);
            if (f.is_face(s) || out.contains(s)) continue;
            const auto idx = s.indices();
            if (std::all_of(idx.begin(), idx.end(), [&](std::size_t j) { return f.is_face(s.without(j)); }))
                out.insert(s);
        }
    return {out.begin(), out.end()};
}

std::size_t r_min(const Fan& f) {
    const auto pc = primitive_collections(f);
    if (pc.empty())
        throw Error(ErrorCode::NoPrimitiveCollection, "the complex is a full simplex; r_min is undefined");
    std::size_t best = pc.front().size();
    for (auto s : pc) best = std::min(best, s.size());
    return best;
}

// --------------------------------------------------- smoothness, completeness

bool is_smooth(const Fan& f) {
    for (auto m : f.maximal_faces())
        if (!is_smooth_cone(f.cone(m))) return false;
    return true;
}

namespace {

// Angular position of a nonzero vector of Z^2: upper half-plane (including
// the positive x-axis) first, then the lower one.
int half_plane(const LatticeVector& v) { return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1; }

Integer cross(const LatticeVector& a, const LatticeVector& b) { return a[0] * b[1] - a[1] * b[0]; }

bool complete_planar(const Fan& f) {
    const std::size_t r = f.ray_count();
    if (r < 3) return false;
    std::vector<std::size_t> order(r);
    std::iota(order.begin(), order.end(), 0);
    const auto& g = f.generators();
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        int ha = half_plane(g[a]), hb = half_plane(g[b]);
        if (ha != hb) return ha < hb;
        return cross(g[a], g[b]) > 0;
    });
    for (std::size_t k = 0; k < r; ++k) {
        std::size_t a = order[k], b = order[(k + 1) % r];
        if (cross(g[a], g[b]) <= 0) return false;
        if (!f.is_face(IndexSet{a, b})) return false;
    }
    return true;
}

// Closed pseudomanifold test on the maximal faces.
bool complete_pseudomanifold(const Fan& f) {
    const std::size_t n = f.dimension();
    const auto maximal = f.maximal_faces();
    if (maximal.empty()) return false;
    for (auto m : maximal)
        if (m.size() != n) return false;

    std::map<IndexSet, std::vector<std::size_t>> ridges;
    for (std::size_t c = 0; c < maximal.size(); ++c)
        for (auto i : maximal[c].indices()) ridges[maximal[c].without(i)].push_back(c);

    std::vector<std::size_t> parent(maximal.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (const auto& [ridge, owners] : ridges) {
        if (owners.size() != 2) return false;
        parent[find(owners[0])] = find(owners[1]);
    }
    for (std::size_t c = 0; c < maximal.size(); ++c)
        if (find(c) != find(0)) return false;
    return true;
}

}  // namespace

bool is_complete(const Fan& f) {
    switch (f.dimension()) {
    case 0: return true;
    case 1: {
        bool pos = false, neg = false;
        for (const auto& g : f.generators()) (g[0] > 0 ? pos : neg) = true;
        return pos && neg;
    }
    case 2: return complete_planar(f);
    default: return complete_pseudomanifold(f);
    }
}

// ----------------------------------------------------------------- subfans

std::vector<Fan> enumerate_subfans(const Fan& f) {
    std::vector<IndexSet> faces;
    for (auto s : f.complex())
        if (s.size() >= 2) faces.push_back(s);  // std::set order: by size, then lexicographic

    std::set<IndexSet> base{IndexSet{}};
    for (std::size_t k = 0; k < f.ray_count(); ++k) base.insert(IndexSet{k});

    std::vector<Fan> out;
    std::set<IndexSet> chosen;
    std::function<void(std::size_t)> recurse = [&](std::size_t i) {
        if (i == faces.size()) {
            if (chosen.size() == faces.size()) return;  // the fan itself
            std::set<IndexSet> complex = base;
            complex.insert(chosen.begin(), chosen.end());
            out.emplace_back(f.dimension(), f.generators(), std::move(complex));
            return;
        }
        const IndexSet s = faces[i];
        recurse(i + 1);
        bool closed = true;
        if (s.size() > 2)
            for (auto j : s.indices())
                if (!chosen.contains(s.without(j))) {
                    closed = false;
                    break;
                }
        if (closed) {
            chosen.insert(s);
            recurse(i + 1);
            chosen.erase(s);
        }
    };
    recurse(0);
    return out;
}

// ------------------------------------------------------------- isomorphism

namespace {

// Coordinates of the generators in a Z-basis of the saturated lattice they
// span: returns (T, k) with T unimodular and T g in Z^k x {0} for each g.
std::pair<IntegerMatrix, std::size_t> saturating_frame(const Fan& f) {
    auto snf = smith_normal_form(f.generator_matrix());
    return {snf.U, snf.rank()};
}

std::vector<IntVector> transformed(const Fan& f, const IntegerMatrix& t, std::size_t k) {
    std::vector<IntVector> out;
    for (const auto& g : f.generators()) {
        IntVector y = t.apply(g.coords());
        y.resize(k);
        out.push_back(std::move(y));
    }
    return out;
}

}  // namespace

std::optional<FanIsomorphism> fan_isomorphism(const Fan& a, const Fan& b) {
    const std::size_t n = a.dimension();
    const std::size_t r = a.ray_count();
    if (b.dimension() != n || b.ray_count() != r || a.complex().size() != b.complex().size())
        return std::nullopt;

    auto [ta, ka] = saturating_frame(a);
    auto [tb, kb] = saturating_frame(b);
    if (ka != kb) return std::nullopt;
    const std::size_t k = ka;
    const auto ga = transformed(a, ta, k);
    const auto gb = transformed(b, tb, k);

    // Frame: greedily chosen independent rays of a.
    std::vector<std::size_t> frame;
    for (std::size_t i = 0; i < r && frame.size() < k; ++i) {
        std::vector<IntVector> trial;
        for (auto j : frame) trial.push_back(ga[j]);
        trial.push_back(ga[i]);
        if (rank(IntegerMatrix::from_columns(trial, k)) == trial.size()) frame.push_back(i);
    }
    std::vector<RationalVector> frame_t(k, RationalVector(k));  // A_f^T
    for (std::size_t c = 0; c < k; ++c)
        for (std::size_t i = 0; i < k; ++i) frame_t[c][i] = ga[frame[c]][i];

    std::map<IntVector, std::size_t> b_index;
    for (std::size_t j = 0; j < r; ++j) b_index.emplace(gb[j], j);
    const IntegerMatrix tb_inv = unimodular_inverse(tb);

    std::vector<std::size_t> image(k);
    std::vector<bool> used(r, false);
    std::optional<FanIsomorphism> found;

    auto try_image = [&]() -> bool {
        // W A_f = B_f  <=>  A_f^T W^T = B_f^T, solved row by row of W.
        IntegerMatrix w(k, k);
        for (std::size_t row = 0; row < k; ++row) {
            RationalVector rhs(k);
            for (std::size_t c = 0; c < k; ++c) rhs[c] = gb[image[c]][row];
            auto sol = solve_rational(frame_t, rhs, k);
            if (!sol) return false;
            for (std::size_t c = 0; c < k; ++c) {
                if (sol->particular[c].get_den() != 1) return false;
                w(row, c) = sol->particular[c].get_num();
            }
        }
        if (!w.is_unimodular()) return false;
        std::vector<std::size_t> perm(r);
        std::vector<bool> hit(r, false);
        for (std::size_t i = 0; i < r; ++i) {
            auto it = b_index.find(w.apply(ga[i]));
            if (it == b_index.end() || hit[it->second]) return false;
            perm[i] = it->second;
            hit[it->second] = true;
        }
        for (auto s : a.complex()) {
            IndexSet mapped;
            for (auto i : s.indices()) mapped = mapped.with(perm[i]);
            if (!b.is_face(mapped)) return false;
        }
        IntegerMatrix full = IntegerMatrix::identity(n);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) full(i, j) = w(i, j);
        found = FanIsomorphism{tb_inv * full * ta, std::move(perm)};
        return true;
    };

    std::function<bool(std::size_t)> search = [&](std::size_t depth) -> bool {
        if (depth == k) return try_image();
        for (std::size_t j = 0; j < r; ++j) {
            if (used[j]) continue;
            used[j] = true;
            image[depth] = j;
            if (search(depth + 1)) return true;
            used[j] = false;
        }
        return false;
    };
    if (k == 0) {
        // No rays span anything: only the zero-ray fan qualifies.
        std::vector<std::size_t> id(r);
        std::iota(id.begin(), id.end(), 0);
        if (a.complex() == b.complex()) return FanIsomorphism{IntegerMatrix::identity(n), id};
        return std::nullopt;
    }
    search(0);
    return found;
}

}  // namespace torickit
