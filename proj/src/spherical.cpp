#include "polyspec/spherical.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

#include "polyspec/errors.hpp"

namespace polyspec {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kCauchyTol = 1e-9;
constexpr int kNodeCap = 1 << 20;

// The integrand is even about 0 and pi/2, so integration reduces to the
// quarter period [0, pi/2] with a single peak at theta = 0 of width e^{-2u}.
// A plain trapezoid rule would need ~e^{2u} nodes to see that peak; instead
// substitute theta = w(x) with a graded map in the style of Kress's corner
// quadratures. w fixes the endpoints and its derivative vanishes to order
// p - 1 at both, which clusters nodes near the peak and restores high-order
// trapezoid convergence.
constexpr int kGradingOrder = 12;

double graded_v(double t) {
    const double a = 1.0 / kGradingOrder - 0.5;
    const double c = 1.0 - 2.0 * t;
    return a * c * c * c + (2.0 * t - 1.0) / kGradingOrder + 0.5;
}

double graded_v_prime(double t) {
    const double a = 1.0 / kGradingOrder - 0.5;
    const double c = 1.0 - 2.0 * t;
    return -6.0 * a * c * c + 2.0 / kGradingOrder;
}

// theta and dtheta/dx at x = t * (pi/2), t in (0, 1).
void graded_node(double t, double* theta, double* weight) {
    const double va = graded_v(t);
    const double vb = graded_v(1.0 - t);
    const double pa = std::pow(va, kGradingOrder);
    const double pb = std::pow(vb, kGradingOrder);
    const double denom = pa + pb;
    *theta = (kPi / 2.0) * pa / denom;
    const double cross = graded_v_prime(t) * vb + va * graded_v_prime(1.0 - t);
    *weight = kGradingOrder * std::pow(va, kGradingOrder - 1) *
              std::pow(vb, kGradingOrder - 1) * cross / (denom * denom);
}

double log_q(double theta, double u) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return std::log(std::exp(-2.0 * u) * c * c + std::exp(2.0 * u) * s * s);
}

// (2/pi) * int_0^{pi/2} f(theta) dtheta under the graded substitution with n
// panels. The transformed integrand vanishes at both endpoints, so interior
// nodes suffice.
template <typename T, typename F>
T quarter_integral(F&& f, int n) {
    const double h = (kPi / 2.0) / n;
    T acc{};
    for (int j = 1; j < n; ++j) {
        double theta, weight;
        graded_node(static_cast<double>(j) / n, &theta, &weight);
        acc += f(theta) * weight;
    }
    return acc * (h * 2.0 / kPi);
}

template <typename T, typename F>
T refine(F&& f, double u, int initial_nodes, int* nodes_out) {
    if (initial_nodes < 64) throw ParameterError("quadrature must start from at least 64 nodes");
    if (u < 0.0) throw ParameterError("u must be nonnegative");
    if (u > 350.0) throw NumericError("u too large for double-precision quadrature");

    int n = initial_nodes;
    T prev = quarter_integral<T>(f, n);
    while (true) {
        if (n >= kNodeCap) throw NumericError("spherical quadrature did not converge within 2^20 nodes");
        n *= 2;
        const T cur = quarter_integral<T>(f, n);
        if (std::abs(cur - prev) < kCauchyTol) {
            *nodes_out = n;
            return cur;
        }
        prev = cur;
    }
}

}  // namespace

SphericalValue phi_detail(double s, double u, int initial_nodes) {
    SphericalValue out;
    out.s = s;
    out.u = u;
    const double e = -0.5 * (s + 1.0);
    out.value = refine<double>([&](double theta) { return std::exp(e * log_q(theta, u)); }, u,
                               initial_nodes, &out.quadrature_nodes);
    return out;
}

double phi(double s, double u, int initial_nodes) { return phi_detail(s, u, initial_nodes).value; }

double phi_imaginary(double t, double u, int initial_nodes) {
    int nodes = 0;
    const std::complex<double> val = refine<std::complex<double>>(
        [&](double theta) {
            const double lq = log_q(theta, u);
            return std::exp(-0.5 * lq) *
                   std::complex<double>(std::cos(0.5 * t * lq), -std::sin(0.5 * t * lq));
        },
        u, initial_nodes, &nodes);
    return val.real();
}

double xi(double u, int initial_nodes) { return phi(0.0, u, initial_nodes); }

PhiBoundReport check_phi_bound(const std::vector<double>& s_grid,
                               const std::vector<double>& u_grid) {
    for (double s : s_grid)
        if (s < 0.0 || s > 1.0) throw ParameterError("s grid must lie in [0, 1]");

    PhiBoundReport report;
    for (double u : u_grid) {
        const double xi_u = xi(u);
        for (double s : s_grid) {
            const double phi_su = phi(s, u);
            const double bound = std::exp(s * u) * xi_u;
            report.rows.push_back({s, u, phi_su, xi_u, bound - phi_su});
            const double excess = (phi_su - bound * (1.0 + 1e-8)) / bound;
            report.max_violation = std::max(report.max_violation, excess);
        }
    }
    return report;
}

XiBoundsReport check_xi_bounds(const std::vector<double>& u_grid) {
    if (u_grid.empty()) throw ParameterError("empty u grid");

    XiBoundsReport report;
    report.lower_slack = std::numeric_limits<double>::max();
    for (double u : u_grid) {
        const double x = xi(u);
        report.fitted_c = std::max(report.fitted_c, x * std::exp(u) / (1.0 + u));
        report.lower_slack = std::min(report.lower_slack, x - std::exp(-u));
    }
    return report;
}

}  // namespace polyspec
