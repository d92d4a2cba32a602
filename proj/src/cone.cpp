#include "torickit/cone.hpp"

#include "torickit/error.hpp"
#include "torickit/lattice.hpp"

#include <algorithm>
#include <set>

namespace torickit {

std::strong_ordering operator<=>(const LatticeVector& a, const LatticeVector& b) {
    if (a.coords_.size() != b.coords_.size()) return a.coords_.size() <=> b.coords_.size();
    for (std::size_t i = 0; i < a.coords_.size(); ++i) {
        int c = cmp(a.coords_[i], b.coords_[i]);
        if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

LatticeVector primitivize(const IntVector& v) {
    Integer g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 0) throw Error(ErrorCode::ZeroVector, "cannot primitivize the zero vector");
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
    return LatticeVector(std::move(out));
}

RationalVector to_rational(const IntVector& v) {
    return RationalVector(v.begin(), v.end());
}

SimplicialCone::SimplicialCone(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

SimplicialCone::SimplicialCone(std::size_t ambient_dim, std::vector<LatticeVector> generators)
    : ambient_dim_(ambient_dim), generators_(std::move(generators)) {
    for (const auto& g : generators_)
        if (g.dimension() != ambient_dim_)
            throw Error(ErrorCode::DimensionMismatch, "cone generator outside the ambient space");
    std::sort(generators_.begin(), generators_.end());
    if (generators_.size() > ambient_dim_ || rank(generator_matrix()) != generators_.size())
        throw Error(ErrorCode::IndependenceViolation, "cone generators are linearly dependent");
}

IntegerMatrix SimplicialCone::generator_matrix() const {
    IntegerMatrix g(ambient_dim_, generators_.size());
    for (std::size_t j = 0; j < generators_.size(); ++j)
        for (std::size_t i = 0; i < ambient_dim_; ++i) g(i, j) = generators_[j][i];
    return g;
}

namespace {

std::size_t rational_rank(const std::vector<RationalVector>& rows, std::size_t cols) {
    auto sol = solve_rational(rows, RationalVector(rows.size()), cols);
    return cols - sol->nullspace.size();
}

Rational dot(const RationalVector& a, const RationalVector& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace

HalfSpaceDescription half_space_description(const SimplicialCone& c) {
    const std::size_t n = c.ambient_dim();
    const std::size_t s = c.dimension();

    // Extend the generators by standard basis vectors to a basis M of Q^n;
    // the rows of M^{-1} are the coordinate functionals of that basis.
    std::vector<IntVector> basis;
    for (const auto& g : c.generators()) basis.push_back(g.coords());
    for (std::size_t e = 0; e < n && basis.size() < n; ++e) {
        IntVector unit(n, Integer(0));
        unit[e] = 1;
        basis.push_back(unit);
        if (rank(IntegerMatrix::from_columns(basis, n)) != basis.size()) basis.pop_back();
    }

    std::vector<RationalVector> m_rows(n, RationalVector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m_rows[i][j] = basis[j][i];

    // Solve M^T y = e_k: y is the k-th row of M^{-1}.
    std::vector<RationalVector> mt(n, RationalVector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) mt[i][j] = m_rows[j][i];

    HalfSpaceDescription h;
    for (std::size_t k = 0; k < n; ++k) {
        RationalVector unit(n, Rational(0));
        unit[k] = 1;
        auto row = solve_rational(mt, unit, n);
        (k < s ? h.inequalities : h.equations).push_back(row->particular);
    }
    return h;
}

bool is_smooth_cone(const SimplicialCone& c) {
    if (c.dimension() == 0) return true;
    auto snf = smith_normal_form(c.generator_matrix());
    for (const auto& d : snf.diagonal())
        if (d != 1) return false;
    return true;
}

bool cone_contains(const SimplicialCone& c, const RationalVector& p) {
    const std::size_t n = c.ambient_dim();
    if (p.size() != n) throw Error(ErrorCode::DimensionMismatch, "point outside the ambient space");
    std::vector<RationalVector> a(n, RationalVector(c.dimension()));
    for (std::size_t j = 0; j < c.dimension(); ++j)
        for (std::size_t i = 0; i < n; ++i) a[i][j] = c.generators()[j][i];
    auto sol = solve_rational(a, p, c.dimension());
    if (!sol) return false;
    return std::all_of(sol->particular.begin(), sol->particular.end(),
                       [](const Rational& x) { return x >= 0; });
}

// Double description over the coefficient orthant of `a`: start from the
// unit rays of λ >= 0 and intersect with b's constraints pulled back along
// λ -> G_a λ. Candidate rays are pruned to the extreme ones by the rank of
// their active constraint set.
std::vector<IntVector> intersection_extreme_rays(const SimplicialCone& a, const SimplicialCone& b) {
    const std::size_t n = a.ambient_dim();
    if (b.ambient_dim() != n) throw Error(ErrorCode::DimensionMismatch, "cones in different spaces");
    const std::size_t s = a.dimension();
    if (s == 0) return {};

    const auto hb = half_space_description(b);
    auto pull_back = [&](const RationalVector& f) {
        RationalVector out(s);
        for (std::size_t j = 0; j < s; ++j)
            for (std::size_t i = 0; i < n; ++i) out[j] += f[i] * a.generators()[j][i];
        return out;
    };

    std::vector<RationalVector> constraints;
    for (std::size_t j = 0; j < s; ++j) {
        RationalVector unit(s, Rational(0));
        unit[j] = 1;
        constraints.push_back(unit);
    }
    std::vector<RationalVector> added;
    for (const auto& f : hb.inequalities) added.push_back(pull_back(f));
    for (const auto& e : hb.equations) {
        auto p = pull_back(e);
        added.push_back(p);
        for (auto& x : p) x = -x;
        added.push_back(p);
    }

    std::vector<IntVector> rays;
    for (std::size_t j = 0; j < s; ++j) {
        IntVector unit(s, Integer(0));
        unit[j] = 1;
        rays.push_back(unit);
    }

    for (const auto& h : added) {
        std::vector<IntVector> pos, zero, neg;
        for (const auto& r : rays) {
            Rational v = dot(h, to_rational(r));
            (v > 0 ? pos : v < 0 ? neg : zero).push_back(r);
        }
        constraints.push_back(h);
        std::set<LatticeVector> candidates;
        for (const auto& r : pos) candidates.insert(primitivize(r));
        for (const auto& r : zero) candidates.insert(primitivize(r));
        for (const auto& p : pos)
            for (const auto& q : neg) {
                Rational hp = dot(h, to_rational(p));
                Rational hq = dot(h, to_rational(q));
                RationalVector combo(s);
                for (std::size_t j = 0; j < s; ++j) combo[j] = hp * q[j] - hq * p[j];
                IntVector v = clear_denominators(combo);
                if (std::any_of(v.begin(), v.end(), [](const Integer& x) { return x != 0; }))
                    candidates.insert(primitivize(v));
            }
        rays.clear();
        for (const auto& c : candidates) {
            RationalVector cr = to_rational(c.coords());
            std::vector<RationalVector> active;
            for (const auto& g : constraints)
                if (dot(g, cr) == 0) active.push_back(g);
            if (rational_rank(active, s) + 1 == s) rays.push_back(c.coords());
        }
    }

    std::set<LatticeVector> out;
    for (const auto& r : rays) {
        IntVector x(n, Integer(0));
        for (std::size_t j = 0; j < s; ++j)
            for (std::size_t i = 0; i < n; ++i) x[i] += r[j] * a.generators()[j][i];
        out.insert(primitivize(x));
    }
    std::vector<IntVector> result;
    for (const auto& v : out) result.push_back(v.coords());
    return result;
}

bool intersection_is_common_face(const SimplicialCone& a, const SimplicialCone& b,
                                 const SimplicialCone& shared) {
    const std::size_t n = a.ambient_dim();
    if (b.ambient_dim() != n || shared.ambient_dim() != n)
        throw Error(ErrorCode::DimensionMismatch, "cones in different spaces");
    for (const auto& g : shared.generators()) {
        auto p = to_rational(g.coords());
        if (!cone_contains(a, p) || !cone_contains(b, p)) return false;
    }
    for (const auto& ray : intersection_extreme_rays(a, b))
        if (!cone_contains(shared, to_rational(ray))) return false;
    return true;
}

}  // namespace torickit
