#include "polyspec/verdicts.hpp"

#include <cmath>
#include <random>

#include "doctest.h"
#include "polyspec/errors.hpp"

using namespace polyspec;

namespace {

Eigen::VectorXd vec2(double a, double b) {
    Eigen::VectorXd v(2);
    v << a, b;
    return v;
}

}  // namespace

TEST_CASE("theta clamps at zero and tracks the involution") {
    const RootSystem a2 = make_a2_family(1).rs;
    const WeylGroup w = make_weyl_group(a2);

    ThetaValue negative = theta_from_delta_prime(a2, w, a2.rho, -0.3);
    CHECK(negative.value == 0.0);
    CHECK(negative.hermitian);

    ThetaValue on_ray = theta_from_delta_prime(a2, w, a2.rho, 0.5);
    CHECK(on_ray.value == 0.5);
    CHECK(on_ray.hermitian);

    ThetaValue off_ray = theta_from_delta_prime(a2, w, a2.from_root_coords(vec2(2, 1)), 0.5);
    CHECK(off_ray.value == 0.5);
    CHECK_FALSE(off_ray.hermitian);

    CHECK_THROWS_AS(theta_from_delta_prime(a2, w, a2.from_root_coords(vec2(-1, 2)), 0.5),
                    PreconditionError);
    CHECK_THROWS_AS(theta_from_delta_prime(a2, w, a2.from_std(vec2(0, 0)), 0.5), ParameterError);
}

TEST_CASE("temperedness report covers the three regimes") {
    const RootSystem b2 = make_b2_so2n(5);
    const double rho_sq = 2.5 * 2.5 + 1.5 * 1.5;

    TemperednessReport tempered = temperedness_report(b2, -0.2);
    CHECK(tempered.tempered);
    CHECK(tempered.theta_rho == 0.0);
    CHECK(tempered.p_upper == 2.0);
    CHECK(tempered.p_upper_even == 2.0);
    REQUIRE(tempered.laplace_bottom.has_value());
    CHECK(*tempered.laplace_bottom == doctest::Approx(rho_sq).epsilon(1e-14));

    TemperednessReport halfway = temperedness_report(b2, 0.5);
    CHECK_FALSE(halfway.tempered);
    CHECK(halfway.p_upper == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(halfway.p_upper_even == 4.0);
    CHECK_FALSE(halfway.laplace_bottom.has_value());

    TemperednessReport odd = temperedness_report(b2, 0.3);
    CHECK(odd.p_upper == doctest::Approx(2.0 / 0.7).epsilon(1e-14));
    CHECK(odd.p_upper_even == 4.0);

    TemperednessReport saturated = temperedness_report(b2, 1.0);
    CHECK(std::isinf(saturated.p_upper));
    CHECK(std::isinf(saturated.p_upper_even));
}

TEST_CASE("dictionary consistency between temperedness and the Laplace interval") {
    const RootSystem b2 = make_b2_so2n(5);
    for (double dp : {-0.5, 0.0, 0.3}) {
        TemperednessReport rep = temperedness_report(b2, dp);
        LaplaceInterval box = laplace_bottom_interval(b2, dp, b2.rho);
        const bool collapsed = box.lo == doctest::Approx(box.hi).epsilon(1e-14) &&
                               box.lo == doctest::Approx(rep.rho_norm_sq).epsilon(1e-14);
        CHECK(rep.tempered == (rep.theta_rho == 0.0));
        CHECK(rep.tempered == collapsed);
    }
}

TEST_CASE("Laplace interval for the B2 benchmark direction") {
    const RootSystem b2 = make_b2_so2n(5);
    const Functional alpha3 = b2.from_std(vec2(1, 0));
    const double rho_sq = 8.5;

    LaplaceInterval box = laplace_bottom_interval(b2, 1.5, alpha3);
    CHECK(box.lo == doctest::Approx(rho_sq - 9.0 / 4.0).epsilon(1e-13));
    CHECK(box.hi == doctest::Approx(rho_sq - 9.0 / 8.0).epsilon(1e-13));

    LaplaceInterval scaled = laplace_bottom_interval(b2, 1.5, alpha3, 2.0);
    CHECK(scaled.lo == doctest::Approx(4.0 * box.lo).epsilon(1e-13));
    CHECK(scaled.hi == doctest::Approx(4.0 * box.hi).epsilon(1e-13));

    CHECK_THROWS_AS(laplace_bottom_interval(b2, 1.5, alpha3, 0.0), ParameterError);
    CHECK_THROWS_AS(laplace_bottom_interval(b2, 1.5, b2.from_std(vec2(0, 1))), PreconditionError);
}

TEST_CASE("rank one closed form and the degenerate interval") {
    CHECK(rank_one_bottom(0.75, 0.5) == doctest::Approx(3.0 / 16.0).epsilon(1e-15));
    CHECK(rank_one_bottom(0.3, 0.5) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(rank_one_bottom(0.5, 0.5) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK_THROWS_AS(rank_one_bottom(-0.1, 0.5), ParameterError);
    CHECK_THROWS_AS(rank_one_bottom(0.5, 0.0), ParameterError);

    // with one factor and mu = rho the interval must pinch to the closed form
    const RootSystem line = make_product_a1({0.5});
    for (double delta : {0.1, 0.5, 0.55, 0.75, 1.0}) {
        const double dp = (delta - 0.5) / 0.5;
        LaplaceInterval box = laplace_bottom_interval(line, dp, line.rho);
        CHECK(box.lo == doctest::Approx(box.hi).epsilon(1e-12));
        CHECK(box.lo == doctest::Approx(rank_one_bottom(delta, 0.5)).epsilon(1e-12));
    }
}

TEST_CASE("A2 boundary point sits on its own gauge sphere") {
    const A2BuildResult build = make_a2_family(1);
    const WeylGroup w = make_weyl_group(build.rs);

    A2BoundaryPoint pt = a2_boundary_point(build.rs, 0.4);
    CHECK(approx_equal(pt.point.std_coords, 0.4 * build.rs.rho.std_coords, 1e-14));
    CHECK(std::abs(poly_norm(build.rs, w, pt.point, build.rs.rho) - 0.4) <= 1e-12);
    CHECK(pt.cap == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(pt.within_cap);
    CHECK_FALSE(pt.caveat.empty());

    A2BoundaryPoint origin = a2_boundary_point(build.rs, -0.7);
    CHECK(origin.point.std_coords.norm() == 0.0);
    CHECK(origin.theta == 0.0);

    A2BoundaryPoint beyond = a2_boundary_point(build.rs, 1.2);
    CHECK_FALSE(beyond.within_cap);

    A2BoundaryPoint m2 = a2_boundary_point(make_a2_family(2).rs, 0.4);
    CHECK(m2.cap == doctest::Approx(1.5).epsilon(1e-15));

    CHECK_THROWS_AS(a2_boundary_point(make_b2_so2n(5), 0.4), ParameterError);
}

TEST_CASE("decay functional presets") {
    const RootSystem a2 = make_a2_family(1).rs;
    PropertyTBound a2_bound = property_t_functional(a2);
    CHECK(approx_equal(a2_bound.theta_functional.std_coords, 0.5 * a2.rho.std_coords, 1e-14));
    CHECK(approx_equal(a2_bound.cap_generator.std_coords, 0.5 * a2.rho.std_coords, 1e-14));

    const RootSystem b2 = make_b2_so2n(5);
    PropertyTBound b2_bound = property_t_functional(b2);
    CHECK(approx_equal(b2_bound.theta_functional.std_coords, vec2(1, 0), 1e-14));
    CHECK(approx_equal(b2_bound.cap_generator.std_coords, vec2(1.5, 1.5), 1e-14));
    CHECK(b2_bound.cap_text == "3/2·conv(Wα₄)");
    CHECK(property_t_functional(make_b2_so2n(3)).cap_text == "1/2·conv(Wα₄)");
    CHECK(property_t_functional(make_b2_so2n(4)).cap_text == "1·conv(Wα₄)");
    CHECK(approx_equal(property_t_functional(make_b2_so2n(3)).cap_generator.std_coords,
                       vec2(0.5, 0.5), 1e-14));

    CHECK_THROWS_AS(property_t_functional(make_a2_family(2).rs), NotAvailableError);
    CHECK_THROWS_AS(property_t_functional(make_product_a1({0.5, 0.5})), NotAvailableError);
}

TEST_CASE("limit cone verdicts") {
    const RootSystem b2 = make_b2_so2n(5);
    LimitConeStats interior;
    interior.min_wall_distance = 0.3;
    CHECK(limit_cone_temperedness(b2, interior) == LimitConeVerdict::ApplicableTempered);

    LimitConeStats narrow;
    narrow.min_wall_distance = 0.01;
    CHECK(limit_cone_temperedness(b2, narrow) == LimitConeVerdict::Inconclusive);

    LimitConeStats on_wall;
    on_wall.min_wall_distance = 0.0;
    CHECK(limit_cone_temperedness(make_product_a1({0.5, 0.5}), on_wall) ==
          LimitConeVerdict::HypothesisUnmet);

    CHECK(limit_cone_temperedness(make_a2_family(1).rs, interior) ==
          LimitConeVerdict::NotApplicable);
    CHECK(limit_cone_temperedness(make_product_a1({0.5}), interior) ==
          LimitConeVerdict::NotApplicable);

    CHECK_THROWS_AS(limit_cone_temperedness(b2, interior, 0.0), ParameterError);
    CHECK_THROWS_AS(limit_cone_temperedness(b2, interior, 0.05, 0.05), ParameterError);

    CHECK(std::string(to_string(LimitConeVerdict::ApplicableTempered)) == "applicable_tempered");
    CHECK(std::string(to_string(LimitConeVerdict::HypothesisUnmet)) == "hypothesis_unmet");
    CHECK(std::string(to_string(DeltaSource::Analytic)) == "analytic");
    CHECK(std::string(to_string(DeltaSource::Estimated)) == "estimated");
}

TEST_CASE("product closed forms") {
    ProductReference ref = product_reference(0.7, 0.3, 0.5, 0.5, 1.0, 1.0);
    CHECK(ref.sup_norm == doctest::Approx(0.2).epsilon(1e-12));
    CHECK_FALSE(ref.tempered);
    CHECK(ref.psi_slope_1 == 0.7);
    CHECK(ref.psi_slope_2 == 0.3);

    ProductReference both_small = product_reference(0.4, 0.4, 0.5, 0.5, 1.0, 1.0);
    CHECK(both_small.sup_norm == 0.0);
    CHECK(both_small.tempered);

    // wall direction: the vanished component only matters if it carries excess
    CHECK(std::isinf(product_reference(0.7, 0.8, 0.5, 0.5, 1.0, 0.0).sup_norm));
    CHECK(product_reference(0.7, 0.3, 0.5, 0.5, 1.0, 0.0).sup_norm ==
          doctest::Approx(0.2).epsilon(1e-12));

    CHECK_THROWS_AS(product_reference(0.7, 0.3, 0.5, 0.5, 0.0, 0.0), ParameterError);
    CHECK_THROWS_AS(product_reference(-0.1, 0.3, 0.5, 0.5, 1.0, 1.0), ParameterError);
    CHECK_THROWS_AS(product_reference(0.7, 0.3, 0.0, 0.5, 1.0, 1.0), ParameterError);
}

TEST_CASE("product sup norm agrees with the coweight-ray route") {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> delta_draw(0.0, 1.2);
    std::uniform_real_distribution<double> rho_draw(0.2, 1.0);
    std::uniform_real_distribution<double> mu_draw(0.1, 2.0);
    for (int trial = 0; trial < 100; ++trial) {
        const double d1 = delta_draw(rng), d2 = delta_draw(rng);
        const double r1 = rho_draw(rng), r2 = rho_draw(rng);
        const double m1 = mu_draw(rng), m2 = mu_draw(rng);

        const RootSystem rs = make_product_a1({r1, r2});
        const Functional excess = rs.from_std(vec2(d1 - r1, d2 - r2));
        const Functional mu = rs.from_std(vec2(m1, m2));
        double oracle = 0.0;
        for (int i = 0; i < rs.rank; ++i) {
            const ChamberVector h = rs.coweight_ray(i);
            oracle = std::max(oracle, excess(h) / mu(h));
        }

        CHECK(product_reference(d1, d2, r1, r2, m1, m2).sup_norm ==
              doctest::Approx(oracle).epsilon(1e-12));
    }
}

TEST_CASE("embedded lattice reference data") {
    const RootSystem b2 = make_b2_so2n(5);
    So2nReference ref = so2n_reference(b2, 1.0, 0.0);
    CHECK(ref.n == 5);
    CHECK(ref.delta_prime == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(approx_equal(ref.mu_gamma.std_coords, vec2(1.5, 0), 1e-14));
    CHECK(ref.psi_axis_slope == 4.0);

    So2nReference diag = so2n_reference(make_b2_so2n(3), 1.0, 1.0);
    CHECK(diag.delta_prime == doctest::Approx(0.5).epsilon(1e-15));

    CHECK_THROWS_AS(so2n_reference(b2, 0.0, 0.0), ParameterError);
    CHECK_THROWS_AS(so2n_reference(b2, 1.0, 2.0), ParameterError);
    CHECK_THROWS_AS(so2n_reference(make_a2_family(1).rs, 1.0, 0.0), ParameterError);
}

TEST_CASE("polyhedral datum matches the grid intersection") {
    for (int n : {3, 5, 10}) {
        const RootSystem b2 = make_b2_so2n(n);
        std::vector<Functional> family;
        for (int k = 0; k <= 10; ++k) {
            const double t = 0.1 * k;
            const So2nReference ref = so2n_reference(b2, 1.0, t);
            family.push_back(b2.scale(b2.from_std(vec2(1.0, t)), ref.delta_prime));
        }
        const Functional meet = intersect(b2, family);
        const Functional expected = so2n_reference(b2, 1.0, 0.0).mu_gamma;
        CHECK(approx_equal(meet.std_coords, expected.std_coords, 1e-9));
        CHECK(approx_equal(meet.root_coords, expected.root_coords, 1e-9));
    }
}
