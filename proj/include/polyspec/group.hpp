#pragma once

#include <optional>
#include <vector>

#include "polyspec/rational.hpp"
#include "polyspec/root_system.hpp"

namespace polyspec {

enum class Realization { SLn, ProductSL2 };

// A matrix-group element: either one n x n unimodular real matrix, or a tuple
// of unimodular 2 x 2 factors. Exact rational entries are carried alongside
// the float view whenever the element was built from rational data; the exact
// form is what ball enumeration dedups on.
struct GroupElement {
    Realization realization = Realization::SLn;
    std::vector<Eigen::MatrixXd> factors;
    std::optional<std::vector<RationalMatrix>> exact;

    int factor_count() const { return static_cast<int>(factors.size()); }
    int dim() const { return static_cast<int>(factors.front().rows()); }
    bool is_exact() const { return exact.has_value(); }
};

GroupElement make_sln(const Eigen::MatrixXd& m);
GroupElement make_sln(const RationalMatrix& m);
GroupElement make_product_sl2(const std::vector<Eigen::Matrix2d>& ms);
GroupElement make_product_sl2(const std::vector<RationalMatrix>& ms);

GroupElement multiply(const GroupElement& x, const GroupElement& y);
GroupElement inverse(const GroupElement& x);

// Raw Cartan projection in realization coordinates: for SL_n the sorted
// (non-increasing) logs of the singular values, summing to zero; for a
// product of SL_2 factors the per-factor nonnegative u with singular values
// (e^u, e^{-u}).
Eigen::VectorXd cartan_projection(const GroupElement& g);

// log of the A-component in g = k a n, i.e. log of the first column's norm.
double iwasawa_a_part_sl2(const GroupElement& g);

// Identifies the realization's flat with the preset's: SL_2 and SL_2-products
// match ProductA1 factor-by-factor, SL_3 embeds isometrically onto the A2
// realization. Anything else is rejected.
ChamberVector embed_projection(const RootSystem& rs, Realization realization,
                               const Eigen::VectorXd& raw);

// Internal log-scaled matrix representation so that deep products (diagonal
// powers at word length 2000) neither overflow nor lose the leading singular
// value. Exposed for the enumeration code and its tests.
struct ScaledMatrix {
    Eigen::MatrixXd m;  // max |entry| normalized to 1
    double log_scale = 0.0;
};

ScaledMatrix to_scaled(const Eigen::MatrixXd& m);
ScaledMatrix to_scaled(const RationalMatrix& m);
ScaledMatrix multiply(const ScaledMatrix& x, const ScaledMatrix& y);
// Raw Cartan projection of the represented matrix (see cartan_projection).
Eigen::VectorXd scaled_cartan_projection(const std::vector<ScaledMatrix>& factors,
                                         Realization realization);

}  // namespace polyspec
