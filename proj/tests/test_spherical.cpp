#include "polyspec/spherical.hpp"

#include <cmath>
#include <vector>

#include "doctest.h"
#include "polyspec/errors.hpp"

using namespace polyspec;

namespace {

// Independent reference for the spectral-parameter-0 value: the quarter-period
// integral is a complete elliptic integral, and with complementary modulus
// k' = e^{-2u} the arithmetic-geometric mean gives
//
//     xi(u) = e^{-u} / agm(1, e^{-2u})
//
// No quadrature involved, stable for the whole u range.
double xi_reference(double u) {
    double a = 1.0;
    double b = std::exp(-2.0 * u);
    for (int i = 0; i < 60 && std::abs(a - b) > 1e-17 * a; ++i) {
        const double am = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = am;
    }
    return std::exp(-u) / a;
}

// Plain trapezoid over the full period, no change of variables. Converges
// only while the peak width e^{-2u} is resolvable, so it serves as a second
// route at small u.
double phi_raw_trapezoid(double s, double u, int nodes) {
    double acc = 0.0;
    for (int j = 0; j < nodes; ++j) {
        const double theta = 2.0 * M_PI * j / nodes;
        const double c = std::cos(theta), sn = std::sin(theta);
        const double q = std::exp(-2.0 * u) * c * c + std::exp(2.0 * u) * sn * sn;
        acc += std::pow(q, -0.5 * (s + 1.0));
    }
    return acc / nodes;
}

}  // namespace

TEST_CASE("phi is 1 at the origin for every spectral parameter") {
    for (double s : {0.0, 0.3, 0.7, 1.0, 1.2})
        CHECK(phi(s, 0.0) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("phi at s = 1 is identically 1") {
    for (double u : {0.0, 2.0, 5.0, 10.0, 15.0, 19.0})
        CHECK(phi(1.0, u) == doctest::Approx(1.0).epsilon(1e-7));
}

TEST_CASE("phi is symmetric under s -> -s") {
    for (double s : {0.3, 0.7, 1.2})
        for (int ui = 0; ui <= 10; ui += 2)
            CHECK(phi(s, ui) == doctest::Approx(phi(-s, ui)).epsilon(1e-8));
}

TEST_CASE("graded quadrature matches the raw trapezoid where the latter converges") {
    for (double s : {0.0, 0.5, 1.0})
        for (double u : {0.0, 0.5, 1.0, 2.0}) {
            const double reference = phi_raw_trapezoid(s, u, 1 << 14);
            CHECK(phi(s, u) == doctest::Approx(reference).epsilon(1e-9));
        }
}

TEST_CASE("the Harish-Chandra function matches the elliptic closed form") {
    for (double u = 0.0; u <= 20.0; u += 1.0) {
        const double ref = xi_reference(u);
        CHECK(xi(u) == doctest::Approx(ref).epsilon(1e-7));
        CHECK(std::abs(xi(u) - ref) < 1e-9);
    }
}

TEST_CASE("xi decreases strictly on the benchmark grid") {
    double prev = xi(0.0);
    CHECK(prev == doctest::Approx(1.0).epsilon(1e-10));
    for (double u = 0.5; u <= 20.0; u += 0.5) {
        const double cur = xi(u);
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("both decay envelopes hold with a small constant") {
    std::vector<double> grid;
    for (double u = 0.0; u <= 20.0; u += 0.5) grid.push_back(u);
    XiBoundsReport report = check_xi_bounds(grid);
    CHECK(report.lower_slack >= -1e-9);
    CHECK(report.fitted_c <= 10.0);
    CHECK(report.fitted_c >= 0.5);  // a vacuous fit would be a broken test
}

TEST_CASE("phi bound report sees no violations on the [0,1] strip") {
    std::vector<double> s_grid = {0.0, 0.25, 0.5, 0.75, 1.0};
    std::vector<double> u_grid;
    for (double u = 0.0; u <= 15.0; u += 1.0) u_grid.push_back(u);
    PhiBoundReport report = check_phi_bound(s_grid, u_grid);
    CHECK(report.max_violation <= 0.0);
    CHECK(report.rows.size() == s_grid.size() * u_grid.size());
    for (const auto& row : report.rows) CHECK(row.slack >= -1e-8);
}

TEST_CASE("imaginary spectral parameters stay below the tempered envelope") {
    for (double t : {0.5, 1.0, 2.0})
        for (double u : {0.0, 1.0, 5.0, 10.0})
            CHECK(std::abs(phi_imaginary(t, u)) <= xi(u) + 1e-8);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(phi(0.5, 1.0, 32), ParameterError);
    CHECK_THROWS_AS(phi(0.5, -1.0), ParameterError);
    CHECK_THROWS_AS(check_phi_bound({1.5}, {1.0}), ParameterError);
    CHECK_THROWS_AS(check_xi_bounds({}), ParameterError);
}

TEST_CASE("reported node counts reflect the refinement") {
    SphericalValue v = phi_detail(0.0, 18.0);
    CHECK(v.quadrature_nodes >= 128);
    CHECK(v.quadrature_nodes <= (1 << 20));
    CHECK(v.value == doctest::Approx(xi_reference(18.0)).epsilon(1e-6));
}
