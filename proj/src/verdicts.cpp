#include "polyspec/verdicts.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "polyspec/errors.hpp"

namespace polyspec {

namespace {

// k/2 rendered as "k/2" or an integer when k is even
std::string half_text(int k) {
    if (k % 2 == 0) return std::to_string(k / 2);
    return std::to_string(k) + "/2";
}

}  // namespace

const char* to_string(DeltaSource s) {
    return s == DeltaSource::Analytic ? "analytic" : "estimated";
}

const char* to_string(LimitConeVerdict v) {
    switch (v) {
        case LimitConeVerdict::ApplicableTempered: return "applicable_tempered";
        case LimitConeVerdict::NotApplicable: return "not_applicable";
        case LimitConeVerdict::HypothesisUnmet: return "hypothesis_unmet";
        case LimitConeVerdict::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

ThetaValue theta_from_delta_prime(const RootSystem& rs, const WeylGroup& w, const Functional& mu,
                                  double delta_prime) {
    if (mu.std_coords.norm() == 0.0) throw ParameterError("direction functional is zero");
    ThetaValue t;
    t.hermitian = is_hermitian_dominant(rs, w, mu);
    t.value = std::max(0.0, delta_prime);
    return t;
}

TemperednessReport temperedness_report(const RootSystem& rs, double delta_prime_rho) {
    TemperednessReport r;
    r.theta_rho = std::max(0.0, delta_prime_rho);
    r.tempered = delta_prime_rho <= 0.0;
    r.rho_norm_sq = rs.rho.norm() * rs.rho.norm();
    if (r.theta_rho < 1.0) {
        r.p_upper = 2.0 / (1.0 - r.theta_rho);
        r.p_upper_even = 2.0 * std::ceil(r.p_upper / 2.0);
    } else {
        r.p_upper = kInfNorm;
        r.p_upper_even = kInfNorm;
    }
    if (r.tempered) r.laplace_bottom = r.rho_norm_sq;
    return r;
}

LaplaceInterval laplace_bottom_interval(const RootSystem& rs, double delta_prime_mu,
                                        const Functional& mu, double metric_scale) {
    if (metric_scale <= 0.0) throw ParameterError("metric scale must be positive");
    if (mu.std_coords.norm() == 0.0) throw ParameterError("direction functional is zero");
    if (!rs.is_dominant(mu)) throw PreconditionError("direction functional must be dominant");

    const double theta = std::max(0.0, delta_prime_mu);
    double min_ray = kInfNorm;
    for (int i = 0; i < rs.rank; ++i) {
        const ChamberVector h = rs.coweight_ray(i);
        min_ray = std::min(min_ray, mu(h) / h.coords.norm());
    }
    const double rho_sq = rs.rho.norm() * rs.rho.norm();
    const double s2 = metric_scale * metric_scale;
    LaplaceInterval out;
    out.lo = s2 * (rho_sq - theta * theta * mu.norm() * mu.norm());
    out.hi = s2 * (rho_sq - theta * theta * min_ray * min_ray);
    return out;
}

double rank_one_bottom(double delta, double rho_scalar) {
    if (delta < 0.0) throw ParameterError("critical exponent must be nonnegative");
    if (rho_scalar <= 0.0) throw ParameterError("rho must be positive");
    if (delta <= rho_scalar) return rho_scalar * rho_scalar;
    const double excess = delta - rho_scalar;
    return rho_scalar * rho_scalar - excess * excess;
}

A2BoundaryPoint a2_boundary_point(const RootSystem& rs, double delta_prime_rho) {
    if (rs.kind != PresetKind::A2Family)
        throw ParameterError("boundary point construction is specific to the A2 family");
    A2BoundaryPoint out;
    out.theta = std::max(0.0, delta_prime_rho);
    out.point = rs.scale(rs.rho, out.theta);
    const double m = rs.a2_multiplicity;
    out.cap = (2.0 * m - 1.0) / m;
    out.within_cap = out.theta <= out.cap + 1e-12;
    out.caveat =
        "certified under a Zariski-density assumption on the group, which is "
        "not checked here";
    return out;
}

PropertyTBound property_t_functional(const RootSystem& rs) {
    PropertyTBound out;
    switch (rs.kind) {
        case PresetKind::A2Family:
            if (rs.a2_multiplicity != 1.0)
                throw NotAvailableError(
                    "uniform decay functional on record only for multiplicity 1");
            out.theta_functional = rs.scale(rs.rho, 0.5);
            out.cap_generator = rs.scale(rs.rho, 0.5);
            out.cap_text = "1/2·conv(Wρ)";
            return out;
        case PresetKind::B2SO2n: {
            Eigen::VectorXd theta(2);
            theta << 1.0, 0.0;
            out.theta_functional = rs.from_std(theta);
            out.cap_generator = rs.from_std(rs.rho.std_coords - theta);
            out.cap_text = half_text(rs.b2_n - 2) + "·conv(Wα₄)";
            return out;
        }
        case PresetKind::ProductA1:
            break;
    }
    throw NotAvailableError("no uniform decay functional on record for this preset");
}

LimitConeVerdict limit_cone_temperedness(const RootSystem& rs, const LimitConeStats& stats,
                                         double margin, double wall_tol) {
    if (margin <= 0.0) throw ParameterError("margin must be positive");
    if (wall_tol < 0.0 || wall_tol >= margin)
        throw ParameterError("wall tolerance must lie in [0, margin)");
    if (!limit_cone_criterion_applicable(rs)) return LimitConeVerdict::NotApplicable;
    if (stats.min_wall_distance <= wall_tol) return LimitConeVerdict::HypothesisUnmet;
    if (stats.min_wall_distance > margin) return LimitConeVerdict::ApplicableTempered;
    return LimitConeVerdict::Inconclusive;
}

ProductReference product_reference(double delta1, double delta2, double rho1, double rho2,
                                   double mu1, double mu2) {
    if (delta1 < 0.0 || delta2 < 0.0) throw ParameterError("critical exponents must be nonnegative");
    if (rho1 <= 0.0 || rho2 <= 0.0) throw ParameterError("rho values must be positive");
    if (mu1 < 0.0 || mu2 < 0.0 || (mu1 <= 1e-12 && mu2 <= 1e-12))
        throw ParameterError("mu must be nonzero with nonnegative entries");

    ProductReference out;
    out.psi_slope_1 = delta1;
    out.psi_slope_2 = delta2;
    out.tempered = delta1 <= rho1 && delta2 <= rho2;

    // same wall semantics as the polyhedral gauge: a zero mu component is a
    // wall, and excess mass on it pushes the norm to +infinity
    out.sup_norm = 0.0;
    const double excess[2] = {delta1 - rho1, delta2 - rho2};
    const double mu[2] = {mu1, mu2};
    for (int i = 0; i < 2; ++i) {
        if (mu[i] > 1e-12)
            out.sup_norm = std::max(out.sup_norm, excess[i] / mu[i]);
        else if (excess[i] > 1e-9)
            out.sup_norm = kInfNorm;
    }
    return out;
}

So2nReference so2n_reference(const RootSystem& rs, double mu1, double mu2) {
    if (rs.kind != PresetKind::B2SO2n)
        throw ParameterError("reference lattice is specific to the B2 preset");
    if (!(mu1 > 0.0) || mu2 < 0.0 || mu2 > mu1)
        throw ParameterError("mu must be dominant with mu1 > 0");
    So2nReference out;
    out.n = rs.b2_n;
    // the growth indicator is supported on the v2 = 0 axis with slope n-1,
    // and rho restricted there has slope n/2, so along the axis ray
    // (psi - rho)(v) = (n-2)/2 * v1 while mu(v) = mu1 * v1
    out.delta_prime = (out.n - 2) / (2.0 * mu1);
    Eigen::VectorXd axis(2);
    axis << (out.n - 2) / 2.0, 0.0;
    out.mu_gamma = rs.from_std(axis);
    out.psi_axis_slope = out.n - 1.0;
    return out;
}

}  // namespace polyspec
