#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyspec/types.hpp"

namespace polyspec {

enum class PresetKind { A2Family, B2SO2n, ProductA1 };

struct PositiveRoot {
    Functional functional;
    double multiplicity = 1.0;
};

// A restricted root system with multiplicities, realized in Euclidean
// coordinates so that the Killing-induced pairing is the standard dot product
// of std_coords. Three preset families are supported:
//
//   A2Family(m):    rank 2, |alpha_i|^2 = 2, 120 degrees between the simple
//                   roots, all three positive roots of multiplicity m,
//                   rho = m*(alpha1 + alpha2).
//   B2SO2n(n):      rank 2 in unit coordinates, simple roots (1,-1) and (0,1),
//                   long/short multiplicities 1 and n-2, rho = (n/2, (n-2)/2).
//   ProductA1(rho): k orthogonal rank-one factors; factor i contributes one
//                   positive root 2*rho_i*e_i of multiplicity 1, so the given
//                   tuple is reproduced as the half sum.
struct RootSystem {
    PresetKind kind;
    int rank = 0;

    // preset parameters; only the relevant ones are set
    double a2_multiplicity = 0.0;  // m
    int b2_n = 0;                  // n
    std::vector<double> product_rhos;

    std::vector<Functional> simple_roots;
    std::vector<PositiveRoot> positive_roots;
    Functional rho;

    Eigen::MatrixXd gram;              // <alpha_i, alpha_j> for simple roots
    Eigen::MatrixXd simple_root_mat;   // columns = std_coords of simple roots
    Eigen::MatrixXd root_coords_mat;   // inverse of simple_root_mat
    Eigen::MatrixXd coweights;         // columns h_i with alpha_j(h_i) = delta_ij

    std::string describe() const;

    Functional from_std(const Eigen::VectorXd& std_coords) const;
    Functional from_root_coords(const Eigen::VectorXd& root_coords) const;
    Functional scale(const Functional& f, double t) const;

    // membership in the closed dominant cone of the dual space
    bool is_dominant(const Functional& f, double tol = 1e-10) const;
    // membership of a chamber vector in the closed dominant cone
    bool is_dominant_chamber(const ChamberVector& h, double tol = 1e-10) const;

    ChamberVector coweight_ray(int i) const;
};

// Arbitrary positive multiplicities outside {1,2,4,8} are accepted for the A2
// family but do not correspond to a symmetric space; `warning` is set in that
// case so callers can surface it.
struct A2BuildResult {
    RootSystem rs;
    std::optional<std::string> warning;
};

A2BuildResult make_a2_family(double m);
RootSystem make_b2_so2n(int n);
RootSystem make_product_a1(const std::vector<double>& rhos);

}  // namespace polyspec
