#include "polyspec/polyhedra.hpp"

#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "polyspec/errors.hpp"

using namespace polyspec;

namespace {

Functional std_functional(const RootSystem& rs, double x, double y) {
    Eigen::VectorXd v(2);
    v << x, y;
    return rs.from_std(v);
}

struct PresetUnderTest {
    RootSystem rs;
    WeylGroup w;
};

std::vector<PresetUnderTest> all_presets() {
    std::vector<PresetUnderTest> out;
    for (RootSystem rs : {make_a2_family(1.0).rs, make_a2_family(2.0).rs, make_b2_so2n(3),
                          make_b2_so2n(5), make_product_a1({1.0, 0.5})}) {
        WeylGroup w = make_weyl_group(rs);
        out.push_back({std::move(rs), std::move(w)});
    }
    return out;
}

Functional random_functional(const RootSystem& rs, std::mt19937& rng) {
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    Eigen::VectorXd v(rs.rank);
    for (int i = 0; i < rs.rank; ++i) v(i) = dist(rng);
    return rs.from_std(v);
}

Functional random_dominant(const RootSystem& rs, const WeylGroup& w, std::mt19937& rng) {
    return dominant_project(rs, w, random_functional(rs, rng)).value;
}

}  // namespace

TEST_CASE("B2 gauge norms have the closed form (l1 + l2, l1)") {
    RootSystem rs = make_b2_so2n(5);
    WeylGroup w = make_weyl_group(rs);
    const Functional alpha3 = std_functional(rs, 1.0, 0.0);
    const Functional alpha4 = std_functional(rs, 1.0, 1.0);

    const Functional lambda = std_functional(rs, 3.0, 1.0);
    CHECK(poly_norm(rs, w, lambda, alpha3) == doctest::Approx(4.0).epsilon(1e-13));
    CHECK(poly_norm(rs, w, lambda, alpha4) == doctest::Approx(3.0).epsilon(1e-13));

    std::mt19937 rng(23);
    std::uniform_real_distribution<double> dist(0.0, 5.0);
    for (int i = 0; i < 200; ++i) {
        double a = dist(rng), b = dist(rng);
        if (a < b) std::swap(a, b);
        const Functional f = std_functional(rs, a, b);
        CHECK(std::abs(poly_norm(rs, w, f, alpha3) - (a + b)) <= 1e-12 * (1.0 + a + b));
        CHECK(std::abs(poly_norm(rs, w, f, alpha4) - a) <= 1e-12 * (1.0 + a));
    }
}

TEST_CASE("the two norm routes agree on random inputs across presets") {
    std::mt19937 rng(31);
    for (const auto& p : all_presets()) {
        for (int i = 0; i < 200; ++i) {
            const Functional lambda = random_functional(p.rs, rng);
            Functional mu = random_dominant(p.rs, p.w, rng);
            if (mu.std_coords.lpNorm<Eigen::Infinity>() < 1e-6) continue;
            const double direct = poly_norm(p.rs, p.w, lambda, mu);
            const double oracle = poly_norm_oracle(p.rs, p.w, lambda, mu);
            if (std::isinf(direct))
                CHECK(std::isinf(oracle));
            else
                CHECK(direct == doctest::Approx(oracle).epsilon(1e-9));
        }
    }
}

TEST_CASE("norm rejects bad mu") {
    RootSystem rs = make_b2_so2n(3);
    WeylGroup w = make_weyl_group(rs);
    const Functional lambda = std_functional(rs, 1.0, 0.0);
    CHECK_THROWS_AS(poly_norm(rs, w, lambda, std_functional(rs, 0.0, 0.0)), ParameterError);
    CHECK_THROWS_AS(poly_norm(rs, w, lambda, std_functional(rs, 0.0, 1.0)), PreconditionError);
}

TEST_CASE("walls of the polyhedron give infinite norms") {
    RootSystem rs = make_product_a1({1.0, 1.0});
    WeylGroup w = make_weyl_group(rs);
    const Functional mu = std_functional(rs, 1.0, 0.0);  // degenerate: a segment
    CHECK(poly_norm(rs, w, std_functional(rs, 1.0, 0.0), mu) == doctest::Approx(1.0));
    CHECK(std::isinf(poly_norm(rs, w, std_functional(rs, 0.0, 1.0), mu)));
    CHECK(std::isinf(poly_norm_oracle(rs, w, std_functional(rs, 0.0, 1.0), mu)));
}

TEST_CASE("membership is the unit ball of the gauge") {
    RootSystem rs = make_b2_so2n(5);
    WeylGroup w = make_weyl_group(rs);
    const Functional alpha3 = std_functional(rs, 1.0, 0.0);
    const Functional alpha4 = std_functional(rs, 1.0, 1.0);
    CHECK(membership(rs, w, alpha3, alpha4));
    CHECK(!membership(rs, w, alpha4, alpha3));
    // boundary points count as members
    CHECK(membership(rs, w, std_functional(rs, 1.0, -1.0), alpha4));
}

TEST_CASE("hull vertex counts match the orbit sizes") {
    RootSystem a2 = make_a2_family(1.0).rs;
    WeylGroup wa = make_weyl_group(a2);
    HullDescription hex = hull(a2, wa, a2.rho);
    CHECK(hex.vertices.size() == 6);
    CHECK(hex.facet_caps(0) == doctest::Approx(1.0));
    CHECK(hex.facet_caps(1) == doctest::Approx(1.0));
    for (const auto& v : hex.vertices) {
        CHECK(v.std_coords.norm() == doctest::Approx(a2.rho.std_coords.norm()));
        CHECK(membership(a2, wa, v, a2.rho));
    }

    RootSystem b2 = make_b2_so2n(5);
    WeylGroup wb = make_weyl_group(b2);
    CHECK(hull(b2, wb, b2.rho).vertices.size() == 8);
    // mu on a wall: the orbit degenerates
    CHECK(hull(b2, wb, std_functional(b2, 1.0, 1.0)).vertices.size() == 4);

    RootSystem a1 = make_product_a1({1.0});
    WeylGroup w1 = make_weyl_group(a1);
    CHECK(hull(a1, w1, a1.rho).vertices.size() == 2);
}

TEST_CASE("intersection takes componentwise minima in root coordinates") {
    RootSystem rs = make_b2_so2n(5);
    WeylGroup w = make_weyl_group(rs);
    const Functional alpha3 = std_functional(rs, 1.0, 0.0);
    const Functional alpha4 = std_functional(rs, 1.0, 1.0);
    Functional meet = intersect(rs, {alpha3, alpha4});
    CHECK((meet.std_coords - alpha3.std_coords).lpNorm<Eigen::Infinity>() < 1e-12);

    CHECK_THROWS_AS(intersect(rs, {}), ParameterError);
    CHECK_THROWS_AS(intersect(rs, {std_functional(rs, 0.0, 1.0)}), PreconditionError);
}

TEST_CASE("intersection soundness: membership in the meet iff membership in every factor") {
    std::mt19937 rng(47);
    for (const auto& p : all_presets()) {
        for (int family_trial = 0; family_trial < 5; ++family_trial) {
            std::vector<Functional> family;
            for (int i = 0; i < 3; ++i) {
                Functional mu = random_dominant(p.rs, p.w, rng);
                // keep the family away from walls so memberships are clean
                Eigen::VectorXd rc = mu.root_coords.cwiseMax(0.2);
                family.push_back(p.rs.from_root_coords(rc));
            }
            const Functional meet = intersect(p.rs, family);
            for (int i = 0; i < 60; ++i) {
                const Functional lambda = random_functional(p.rs, rng);
                // skip the facet band where a tolerance could flip the verdict
                bool near_facet = false;
                bool all = true;
                for (const auto& mu : family) {
                    const double n = poly_norm(p.rs, p.w, lambda, mu);
                    if (std::abs(n - 1.0) < 1e-6) near_facet = true;
                    if (n > 1.0) all = false;
                }
                const double n_meet = poly_norm(p.rs, p.w, lambda, meet);
                if (near_facet || std::abs(n_meet - 1.0) < 1e-6) continue;
                CHECK(membership(p.rs, p.w, lambda, meet) == all);
            }
        }
    }
}

TEST_CASE("optimal polyhedron scales, intersects, and flags Hermitian data") {
    RootSystem a2 = make_a2_family(1.0).rs;
    WeylGroup wa = make_weyl_group(a2);
    OptimalPolyhedron best = optimal_polyhedron(a2, wa, {{a2.rho, 0.5}});
    CHECK((best.mu.std_coords - 0.5 * a2.rho.std_coords).lpNorm<Eigen::Infinity>() < 1e-12);
    CHECK(best.hermitian);

    RootSystem b2 = make_b2_so2n(5);
    WeylGroup wb = make_weyl_group(b2);
    const Functional alpha3 = std_functional(b2, 1.0, 0.0);
    const Functional alpha4 = std_functional(b2, 1.0, 1.0);
    OptimalPolyhedron meet = optimal_polyhedron(b2, wb, {{alpha3, 1.0}, {alpha4, 2.0}});
    CHECK((meet.mu.std_coords - alpha3.std_coords).lpNorm<Eigen::Infinity>() < 1e-12);
    CHECK(meet.hermitian);

    CHECK_THROWS_AS(optimal_polyhedron(a2, wa, {{a2.rho, -0.25}}), ParameterError);
}
