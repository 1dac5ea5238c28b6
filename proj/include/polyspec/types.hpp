#pragma once

#include <Eigen/Dense>

namespace polyspec {

// A point of the Cartan subspace, in coordinates dual to Functional::std_coords.
// For SL_n group elements the raw projection has n entries summing to zero;
// after embedding into one of the presets it has `rank` entries.
struct ChamberVector {
    Eigen::VectorXd coords;
};

// A linear functional on the Cartan subspace. `std_coords` holds the
// coefficients against the preset's coordinate functionals, `root_coords` the
// coefficients c_i of the expansion against the simple roots. Both are kept in
// sync by the RootSystem factory methods; code elsewhere treats them as
// read-only.
struct Functional {
    Eigen::VectorXd std_coords;
    Eigen::VectorXd root_coords;

    double operator()(const ChamberVector& h) const { return std_coords.dot(h.coords); }
    double norm() const { return std_coords.norm(); }
};

inline bool approx_equal(const Eigen::VectorXd& a, const Eigen::VectorXd& b, double tol) {
    return a.size() == b.size() && (a - b).lpNorm<Eigen::Infinity>() <= tol;
}

}  // namespace polyspec
