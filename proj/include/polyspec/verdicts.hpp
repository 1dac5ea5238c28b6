#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyspec/growth.hpp"
#include "polyspec/polyhedra.hpp"

namespace polyspec {

// Whether a delta-prime value came from a closed form or from a finite orbit
// fit. Estimated input makes every downstream conclusion heuristic and the
// reports label it that way.
enum class DeltaSource { Analytic, Estimated };

const char* to_string(DeltaSource s);

// Decay exponent attached to a direction functional. When mu is not fixed by
// the opposition involution, equality with max(0, delta') is not available and
// the value only bounds the true exponent from below; `hermitian` records
// which case holds.
struct ThetaValue {
    double value = 0.0;
    bool hermitian = false;
};

ThetaValue theta_from_delta_prime(const RootSystem& rs, const WeylGroup& w, const Functional& mu,
                                  double delta_prime);

// Conclusions that depend only on delta'(rho): temperedness, the
// integrability range [p_lower, p_upper] of almost-L^p matrix coefficients,
// and the bottom of the Laplace spectrum in the tempered case.
struct TemperednessReport {
    double theta_rho = 0.0;
    bool tempered = false;
    double p_lower = 2.0;
    double p_upper = 2.0;       // +infinity once theta_rho reaches 1
    double p_upper_even = 2.0;  // 2*ceil(p_upper/2), the even-integer form
    double rho_norm_sq = 0.0;
    std::optional<double> laplace_bottom;  // set exactly when tempered
};

TemperednessReport temperedness_report(const RootSystem& rs, double delta_prime_rho);

struct LaplaceInterval {
    double lo = 0.0;
    double hi = 0.0;
};

// Two-sided enclosure of the bottom of the Laplace spectrum from a single
// directional exponent:
//
//   lo = ||rho||^2 - theta^2 ||mu||^2
//   hi = ||rho||^2 - theta^2 (min_i mu(h_i)/||h_i||)^2
//
// with theta = max(0, delta'). The chamber minimum of mu(H)/||H|| is attained
// on a coweight ray, so only the rays are scanned. Both ends scale with
// metric_scale^2.
LaplaceInterval laplace_bottom_interval(const RootSystem& rs, double delta_prime_mu,
                                        const Functional& mu, double metric_scale = 1.0);

// Rank-one closed form: rho^2 below the critical exponent threshold,
// rho^2 - (delta - rho)^2 above it.
double rank_one_bottom(double delta, double rho_scalar);

// Certified point max(0, delta') * rho on the boundary of the complementary
// spectrum, available for the A2 family only. The construction assumes the
// group is Zariski dense; `caveat` carries that assumption as report text
// since no density check is performed.
struct A2BoundaryPoint {
    Functional point;
    double theta = 0.0;
    double cap = 0.0;  // (2m-1)/m, the uniform ceiling for the gauge of the point
    bool within_cap = true;
    std::string caveat;
};

A2BoundaryPoint a2_boundary_point(const RootSystem& rs, double delta_prime_rho);

// Uniform decay functional Theta for the presets where one is on record,
// together with the dominant generator of the induced cap conv(W(rho-Theta)).
struct PropertyTBound {
    Functional theta_functional;
    Functional cap_generator;
    std::string cap_text;
};

PropertyTBound property_t_functional(const RootSystem& rs);

enum class LimitConeVerdict { ApplicableTempered, NotApplicable, HypothesisUnmet, Inconclusive };

const char* to_string(LimitConeVerdict v);

// Temperedness via the limit-cone criterion. `margin` is the wall clearance
// demanded before the interior-cone hypothesis counts as verified; distances
// at or below `wall_tol` count as touching a wall.
LimitConeVerdict limit_cone_temperedness(const RootSystem& rs, const LimitConeStats& stats,
                                         double margin = 0.05, double wall_tol = 1e-6);

// Closed forms for a product of two rank-one factors with critical exponents
// delta_i: the gauge of the complementary spectrum in direction mu, the
// growth indicator slopes, and the temperedness verdict.
struct ProductReference {
    double sup_norm = 0.0;  // +infinity on a wall direction with live mass
    bool tempered = false;
    double psi_slope_1 = 0.0;  // psi(H) = slope_1*|H_1| + slope_2*|H_2|
    double psi_slope_2 = 0.0;
};

ProductReference product_reference(double delta1, double delta2, double rho1, double rho2,
                                   double mu1, double mu2);

// Closed forms for the standard embedded lattice of the B2 preset: the
// modified exponent in direction mu, the polyhedral datum (n-2)/2 * alpha_3,
// and the growth-indicator slope (n-1) on the v2 = 0 axis.
struct So2nReference {
    int n = 0;
    double delta_prime = 0.0;
    Functional mu_gamma;
    double psi_axis_slope = 0.0;
};

So2nReference so2n_reference(const RootSystem& rs, double mu1, double mu2);

// Assembled verdict for one run, consumed by the report writers.
struct ThetaEntry {
    Functional mu;
    double delta_prime = 0.0;
    ThetaValue theta;
};

struct SpectralVerdict {
    DeltaSource source = DeltaSource::Analytic;
    std::vector<ThetaEntry> exponents;
    TemperednessReport temperedness;
    std::optional<LaplaceInterval> laplace;
    std::vector<Functional> special_points;
    std::optional<LimitConeVerdict> limit_cone;
    std::vector<std::string> notes;
};

}  // namespace polyspec
