#include "torickit/holmap.hpp"

#include "torickit/error.hpp"

#include <algorithm>
#include <set>

namespace torickit {

PolyTuple::PolyTuple(std::vector<Polynomial> polys) : polys_(std::move(polys)) {
    for (std::size_t i = 0; i < polys_.size(); ++i)
        if (!polys_[i].is_monic())
            throw Error(ErrorCode::DegreeMismatch, "polynomial f_" + std::to_string(i + 1) + " is not monic");
}

IntVector PolyTuple::degrees() const {
    IntVector d;
    for (const auto& p : polys_) d.emplace_back(p.degree());
    return d;
}

Configuration::Configuration(std::vector<PointMultiset> parts) : parts_(std::move(parts)) {
    for (const auto& part : parts_)
        for (const auto& [point, mult] : part)
            if (mult == 0) throw Error(ErrorCode::SizeMismatch, "point " + point.to_string() + " has multiplicity 0");
}

IntVector Configuration::degrees() const {
    IntVector d;
    for (const auto& part : parts_) {
        Integer s = 0;
        for (const auto& [point, mult] : part) s += mult;
        d.push_back(s);
    }
    return d;
}

std::size_t Configuration::point_count() const {
    std::size_t n = 0;
    for (const auto& part : parts_) n += part.size();
    return n;
}

namespace {

void require_degree(const Fan& f, const IntVector& d, ErrorCode code) {
    try {
        degree_of(f, d);
    } catch (const Error& e) {
        throw Error(code, std::string("degrees ") + to_string(d) + " rejected: " + e.what());
    }
}

}  // namespace

MembershipResult check_membership(const PolyTuple& t, const Fan& f) {
    require_degree(f, t.degrees(), ErrorCode::DegreeMismatch);
    MembershipResult result;
    for (auto sigma : primitive_collections(f)) {
        const auto idx = sigma.indices();
        Polynomial g = t[idx.front()];
        for (std::size_t k = 1; k < idx.size() && g.degree() > 0; ++k) g = gcd(g, t[idx[k]]);
        if (g.degree() > 0) {
            result.member = false;
            result.witness = sigma;
            result.common_factor = std::move(g);
            return result;
        }
    }
    return result;
}

bool is_member(const PolyTuple& t, const Fan& f) { return check_membership(t, f).member; }

bool config_is_member(const Configuration& c, const Fan& f) {
    require_degree(f, c.degrees(), ErrorCode::SizeMismatch);
    for (auto sigma : primitive_collections(f)) {
        const auto idx = sigma.indices();
        const auto& first = c.parts()[idx.front()];
        for (const auto& [point, mult] : first) {
            bool everywhere = true;
            for (std::size_t k = 1; k < idx.size() && everywhere; ++k)
                everywhere = c.parts()[idx[k]].contains(point);
            if (everywhere) return false;
        }
    }
    return true;
}

PolyTuple config_to_polytuple(const Configuration& c) {
    std::vector<Polynomial> polys;
    for (const auto& part : c.parts()) {
        Polynomial p = Polynomial::constant(1);
        for (const auto& [point, mult] : part) p = p * Polynomial::linear(point).pow(mult);
        polys.push_back(std::move(p));
    }
    return PolyTuple(std::move(polys));
}

EvaluationResult evaluate(const PolyTuple& t, const Fan& f, const GaussianRational& alpha) {
    if (t.size() != f.ray_count())
        throw Error(ErrorCode::DegreeMismatch, "tuple length differs from the number of rays");
    EvaluationResult result;
    for (const auto& p : t.polys()) result.point.push_back(p(alpha));
    for (auto sigma : primitive_collections(f)) {
        const auto idx = sigma.indices();
        if (std::all_of(idx.begin(), idx.end(), [&](std::size_t i) { return result.point[i].is_zero(); }))
            result.violated_collections.push_back(sigma);
    }
    return result;
}

std::vector<GaussianRational> default_stabilization_points(const PolyTuple& t) {
    Integer total = 0;
    for (const auto& d : t.degrees()) total += d;
    const std::size_t r = t.size();
    std::vector<GaussianRational> points;
    for (std::size_t j = 1; j <= r; ++j) {
        Rational x = Rational(total) + Rational(static_cast<long>(j), static_cast<long>(r + 1));
        x.canonicalize();
        points.emplace_back(x);
    }
    return points;
}

StabilizationResult stabilize(const PolyTuple& t, const Fan& f, const IntVector& increment,
                              std::optional<std::vector<GaussianRational>> points) {
    require_degree(f, t.degrees(), ErrorCode::DegreeMismatch);
    try {
        degree_of(f, increment);
    } catch (const Error& e) {
        throw Error(ErrorCode::NonKernelIncrement, std::string("increment rejected: ") + e.what());
    }
    std::vector<GaussianRational> xs = points ? std::move(*points) : default_stabilization_points(t);
    if (xs.size() != t.size())
        throw Error(ErrorCode::DuplicatePoints, "expected " + std::to_string(t.size()) + " stabilization points");
    if (std::set<GaussianRational>(xs.begin(), xs.end()).size() != xs.size())
        throw Error(ErrorCode::DuplicatePoints, "stabilization points must be pairwise distinct");

    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < t.size(); ++i)
        out.push_back(t[i] * Polynomial::linear(xs[i]).pow(static_cast<unsigned>(increment[i].get_ui())));
    StabilizationResult result{PolyTuple(std::move(out)), false, std::move(xs)};
    result.member = is_member(result.tuple, f);
    return result;
}

Configuration scanning_snapshot(const Configuration& c, const GaussianRational& w, const Rational& eps0) {
    if (eps0 <= 0) throw Error(ErrorCode::NonPositive, "scanning radius must be positive");
    const Rational r2 = eps0 * eps0;
    std::vector<PointMultiset> parts;
    for (const auto& part : c.parts()) {
        PointMultiset kept;
        for (const auto& [point, mult] : part) {
            const GaussianRational offset = point - w;
            if (offset.norm() < r2) kept.emplace(offset / GaussianRational(eps0), mult);
        }
        parts.push_back(std::move(kept));
    }
    return Configuration(std::move(parts));
}

}  // namespace torickit
