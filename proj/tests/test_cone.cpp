#include "doctest.h"
#include "oracles.hpp"

#include "torickit/cone.hpp"
#include "torickit/error.hpp"

#include <random>

using namespace torickit;

namespace {

IntVector ivec(const std::vector<long>& v) {
    IntVector out;
    for (long x : v) out.emplace_back(x);
    return out;
}

LatticeVector lv(const std::vector<long>& v) { return primitivize(ivec(v)); }

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::ParseError;
}

// Membership oracle for a cone in R^2 or R^3 with independent generators:
// solve for coefficients by Cramer's rule with integer determinants.
bool contains_by_cramer(const std::vector<std::vector<long>>& gens, const std::vector<long>& p) {
    const std::size_t n = p.size(), s = gens.size();
    if (s == 0) return std::all_of(p.begin(), p.end(), [](long x) { return x == 0; });
    // Pick s coordinates where the generator minor is nonzero.
    std::optional<std::vector<std::size_t>> chosen;
    oracle::for_each_subset(n, s, [&](const std::vector<std::size_t>& rows) {
        if (chosen) return;
        std::vector<std::vector<Integer>> m(s, std::vector<Integer>(s));
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = 0; j < s; ++j) m[i][j] = gens[j][rows[i]];
        if (oracle::laplace_det(m) != 0) chosen = rows;
    });
    const auto& rows = *chosen;
    std::vector<std::vector<Integer>> m(s, std::vector<Integer>(s));
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) m[i][j] = gens[j][rows[i]];
    const Integer det = oracle::laplace_det(m);
    std::vector<Rational> coeff(s);
    for (std::size_t j = 0; j < s; ++j) {
        auto mj = m;
        for (std::size_t i = 0; i < s; ++i) mj[i][j] = p[rows[i]];
        coeff[j] = Rational(oracle::laplace_det(mj), det);
        coeff[j].canonicalize();
        if (coeff[j] < 0) return false;
    }
    for (std::size_t k = 0; k < n; ++k) {
        Rational acc = 0;
        for (std::size_t j = 0; j < s; ++j) acc += coeff[j] * gens[j][k];
        if (acc != p[k]) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("primitivize") {
    CHECK(primitivize(ivec({4, -6})).coords() == ivec({2, -3}));
    CHECK(primitivize(ivec({0, 0, -5})).coords() == ivec({0, 0, -1}));
    CHECK(code_of([] { primitivize(ivec({0, 0})); }) == ErrorCode::ZeroVector);
}

TEST_CASE("simplicial cone construction") {
    CHECK(SimplicialCone(2).dimension() == 0);
    SimplicialCone c(2, {lv({0, 1}), lv({1, 0})});
    CHECK(c.generators().front() == lv({0, 1}));
    CHECK(c == SimplicialCone(2, {lv({1, 0}), lv({0, 1})}));
    CHECK(code_of([] { SimplicialCone(2, {lv({1, 1}), lv({2, 2})}); }) == ErrorCode::IndependenceViolation);
    CHECK(code_of([] { SimplicialCone(2, {lv({1, 0}), lv({0, 1}), lv({1, 1})}); }) == ErrorCode::IndependenceViolation);
    CHECK(code_of([] { SimplicialCone(2, {lv({1, 0, 0})}); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("smooth cones") {
    CHECK(is_smooth_cone(SimplicialCone(2, {lv({1, 0}), lv({0, 1})})));
    CHECK(is_smooth_cone(SimplicialCone(2, {lv({-1, 2}), lv({0, -1})})));
    CHECK_FALSE(is_smooth_cone(SimplicialCone(2, {lv({1, 0}), lv({1, 2})})));
    CHECK(is_smooth_cone(SimplicialCone(3, {lv({1, 0, 0}), lv({0, 1, 0})})));
    CHECK_FALSE(is_smooth_cone(SimplicialCone(3, {lv({1, 1, 0}), lv({1, -1, 0})})));
}

TEST_CASE("half-space description matches Cramer membership") {
    std::mt19937 rng(17);
    int tested = 0;
    while (tested < 80) {
        const std::size_t n = 2 + rng() % 2, s = 1 + rng() % n;
        auto g = oracle::random_matrix(rng, s, n, 3);
        std::vector<LatticeVector> gens;
        bool ok = true;
        for (auto& row : g) {
            if (std::all_of(row.begin(), row.end(), [](long x) { return x == 0; })) ok = false;
        }
        if (!ok) continue;
        for (auto& row : g) gens.push_back(lv(row));
        std::optional<SimplicialCone> c;
        try {
            c.emplace(n, gens);
        } catch (const Error&) {
            continue;
        }
        std::vector<std::vector<long>> prim;
        for (const auto& gv : c->generators()) {
            std::vector<long> row;
            for (const auto& x : gv.coords()) row.push_back(x.get_si());
            prim.push_back(row);
        }
        ++tested;
        oracle::for_each_box_vector(n, -3, 3, [&](const std::vector<long>& p) {
            RationalVector pq;
            for (long x : p) pq.emplace_back(x);
            CHECK(cone_contains(*c, pq) == contains_by_cramer(prim, p));
            return true;
        });
    }
}

TEST_CASE("intersection of cones: fixed examples") {
    SimplicialCone quad1(2, {lv({1, 0}), lv({0, 1})});
    SimplicialCone quad2(2, {lv({0, 1}), lv({-1, 0})});
    SimplicialCone ray(2, {lv({0, 1})});
    CHECK(intersection_extreme_rays(quad1, quad2) == std::vector<IntVector>{ivec({0, 1})});
    CHECK(intersection_is_common_face(quad1, quad2, ray));

    SimplicialCone tilted(2, {lv({1, 1}), lv({-1, 1})});
    auto rays = intersection_extreme_rays(quad1, tilted);
    CHECK(rays == std::vector<IntVector>{ivec({0, 1}), ivec({1, 1})});
    CHECK_FALSE(intersection_is_common_face(quad1, tilted, ray));

    SimplicialCone opp(2, {lv({-1, 0}), lv({0, -1})});
    CHECK(intersection_extreme_rays(quad1, opp).empty());
    CHECK(intersection_is_common_face(quad1, opp, SimplicialCone(2)));

    SimplicialCone a3(3, {lv({1, 0, 0}), lv({0, 1, 0}), lv({0, 0, 1})});
    SimplicialCone b3(3, {lv({1, 1, 0}), lv({0, 0, 1}), lv({-1, 0, 0})});
    CHECK(intersection_extreme_rays(a3, b3) == std::vector<IntVector>{ivec({0, 0, 1}), ivec({0, 1, 0}), ivec({1, 1, 0})});
}

TEST_CASE("intersection extreme rays agree with pointwise membership") {
    std::mt19937 rng(23);
    int tested = 0;
    while (tested < 40) {
        const std::size_t n = 2 + rng() % 2;
        auto make = [&]() -> std::optional<SimplicialCone> {
            auto g = oracle::random_matrix(rng, n, n, 2);
            std::vector<LatticeVector> gens;
            for (auto& row : g) {
                if (std::all_of(row.begin(), row.end(), [](long x) { return x == 0; })) return std::nullopt;
                gens.push_back(lv(row));
            }
            try {
                return SimplicialCone(n, gens);
            } catch (const Error&) {
                return std::nullopt;
            }
        };
        auto a = make(), b = make();
        if (!a || !b) continue;
        ++tested;
        const auto rays = intersection_extreme_rays(*a, *b);
        for (const auto& r : rays) {
            CHECK(cone_contains(*a, to_rational(r)));
            CHECK(cone_contains(*b, to_rational(r)));
        }
        // A nonzero common point forces at least one ray.
        oracle::for_each_box_vector(n, -3, 3, [&](const std::vector<long>& p) {
            RationalVector pq;
            for (long x : p) pq.emplace_back(x);
            bool in_both = cone_contains(*a, pq) && cone_contains(*b, pq);
            if (in_both && std::any_of(p.begin(), p.end(), [](long x) { return x != 0; })) CHECK(!rays.empty());
            return true;
        });
        if (n == 2 && rays.size() == 2) {
            // In the plane, the intersection is the cone between the two rays.
            SimplicialCone between(2, {primitivize(rays[0]), primitivize(rays[1])});
            oracle::for_each_box_vector(n, -4, 4, [&](const std::vector<long>& p) {
                RationalVector pq;
                for (long x : p) pq.emplace_back(x);
                CHECK((cone_contains(*a, pq) && cone_contains(*b, pq)) == cone_contains(between, pq));
                return true;
            });
        }
    }
}
