#pragma once

#include <limits>
#include <vector>

#include "polyspec/weyl.hpp"

namespace polyspec {

// Gauge norm of the W-invariant polyhedron conv(W mu), evaluated from the
// simple-root coordinates of the dominant projection of lambda:
//
//     max_i c_i(lambda_dom) / c_i(mu)
//
// mu must be dominant and nonzero. Walls of the polyhedron (c_i(mu) = 0) give
// +infinity as soon as lambda_dom has weight on the corresponding coordinate;
// a 0/0 coordinate contributes nothing.
double poly_norm(const RootSystem& rs, const WeylGroup& w, const Functional& lambda,
                 const Functional& mu);

// Same value through an independent route: the polyhedron's support lines are
// spanned by the fundamental coweight rays h_i, so the gauge is the maximum of
// (w lambda)(h_i) / mu(h_i) over the full orbit and all rays. Kept free of
// dominant projection and of root coordinates of lambda so the two routes can
// cross-check each other.
double poly_norm_oracle(const RootSystem& rs, const WeylGroup& w, const Functional& lambda,
                        const Functional& mu);

inline constexpr double kMembershipTol = 1e-10;

bool membership(const RootSystem& rs, const WeylGroup& w, const Functional& lambda,
                const Functional& mu);

struct HullDescription {
    std::vector<Functional> vertices;    // dedup'd orbit of mu, enumeration order
    Eigen::VectorXd facet_caps;          // c_i(mu); the gauge is max_i c_i(.)/facet_caps_i
};

HullDescription hull(const RootSystem& rs, const WeylGroup& w, const Functional& mu);

// Largest W-invariant polyhedron of conv(W .) type contained in every member
// of the family: componentwise infimum in simple-root coordinates. All members
// must be dominant; the result provably is.
Functional intersect(const RootSystem& rs, const std::vector<Functional>& family);

struct DirectionalBound {
    Functional mu;
    double theta = 0.0;  // scale factor; 0 collapses the polyhedron to {0}
};

struct OptimalPolyhedron {
    Functional mu;
    bool hermitian = false;
};

OptimalPolyhedron optimal_polyhedron(const RootSystem& rs, const WeylGroup& w,
                                     const std::vector<DirectionalBound>& bounds);

inline constexpr double kInfNorm = std::numeric_limits<double>::infinity();

}  // namespace polyspec
