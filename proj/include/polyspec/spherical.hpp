#pragma once

#include <vector>

namespace polyspec {

// Rank-one SL2(R) model. Normalization: a_u = diag(e^u, e^{-u}), so the
// positive root is alpha(u) = 2u and rho(u) = u. Every SL2 exponent quoted
// by the growth and verdict code (delta lattice = 2, etc.) assumes this
// scaling.
//
//   phi_s(a_u) = (1/2pi) * int_0^{2pi} (e^{-2u} cos^2 t + e^{2u} sin^2 t)^{-(s+1)/2} dt
//   xi(u)      = phi_0(a_u)

struct SphericalValue {
    double s = 0.0;            // spectral parameter, lambda = s * rho
    double u = 0.0;            // chamber coordinate
    double value = 0.0;
    int quadrature_nodes = 0;  // panels on the reduced quarter period at convergence
};

// Evaluates phi_s(a_u), doubling the node count until two successive
// refinements agree to 1e-9. initial_nodes must be at least 64; failure to
// converge by 2^20 nodes raises NumericError.
SphericalValue phi_detail(double s, double u, int initial_nodes = 64);
double phi(double s, double u, int initial_nodes = 64);

// phi at purely imaginary spectral parameter s = i*t. The value is real
// analytically; the quadrature's small imaginary residue is dropped.
double phi_imaginary(double t, double u, int initial_nodes = 64);

// Harish-Chandra function: the spherical function at spectral parameter 0.
double xi(double u, int initial_nodes = 64);

struct PhiBoundRow {
    double s = 0.0;
    double u = 0.0;
    double phi = 0.0;
    double xi = 0.0;
    double slack = 0.0;  // e^{s u} * xi - phi, nonnegative when the bound holds
};

struct PhiBoundReport {
    double max_violation = 0.0;  // worst relative excess over the cushioned bound
    std::vector<PhiBoundRow> rows;
};

// Checks phi_s(a_u) <= e^{s u} * xi(u) * (1 + 1e-8) over the grid; s values
// must lie in [0, 1]. Violations are reported, never thrown.
PhiBoundReport check_phi_bound(const std::vector<double>& s_grid,
                               const std::vector<double>& u_grid);

struct XiBoundsReport {
    double fitted_c = 0.0;     // smallest C with xi(u) <= C (1+u) e^{-u} on the grid
    double lower_slack = 0.0;  // worst xi(u) - e^{-u}
};

XiBoundsReport check_xi_bounds(const std::vector<double>& u_grid);

}  // namespace polyspec
