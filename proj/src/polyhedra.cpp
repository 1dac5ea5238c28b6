#include "polyspec/polyhedra.hpp"

#include <algorithm>
#include <cmath>

#include "polyspec/errors.hpp"

namespace polyspec {

namespace {

constexpr double kWallTol = 1e-12;  // |c_i(mu)| below this counts as a wall
constexpr double kMassTol = 1e-9;   // lambda weight that turns a wall into infinity

void require_valid_mu(const RootSystem& rs, const Functional& mu) {
    if (mu.std_coords.lpNorm<Eigen::Infinity>() <= kWallTol)
        throw ParameterError("poly norm is undefined for mu = 0");
    if (!rs.is_dominant(mu))
        throw PreconditionError("poly norm requires a dominant mu");
}

}  // namespace

double poly_norm(const RootSystem& rs, const WeylGroup& w, const Functional& lambda,
                 const Functional& mu) {
    require_valid_mu(rs, mu);

    const Eigen::VectorXd c_lambda = dominant_project(rs, w, lambda).value.root_coords;
    const Eigen::VectorXd& c_mu = mu.root_coords;

    double best = 0.0;
    for (int i = 0; i < rs.rank; ++i) {
        if (std::abs(c_mu(i)) <= kWallTol) {
            if (c_lambda(i) > kMassTol) return kInfNorm;
            continue;
        }
        best = std::max(best, c_lambda(i) / c_mu(i));
    }
    return best;
}

double poly_norm_oracle(const RootSystem& rs, const WeylGroup& w, const Functional& lambda,
                        const Functional& mu) {
    require_valid_mu(rs, mu);

    double best = 0.0;
    for (int i = 0; i < rs.rank; ++i) {
        const Eigen::VectorXd h = rs.coweights.col(i);
        double orbit_max = -kInfNorm;
        for (const auto& e : w.elements)
            orbit_max = std::max(orbit_max, (e * lambda.std_coords).dot(h));

        const double mu_h = mu.std_coords.dot(h);
        if (std::abs(mu_h) <= kWallTol) {
            if (orbit_max > kMassTol) return kInfNorm;
            continue;
        }
        best = std::max(best, orbit_max / mu_h);
    }
    return best;
}

bool membership(const RootSystem& rs, const WeylGroup& w, const Functional& lambda,
                const Functional& mu) {
    return poly_norm(rs, w, lambda, mu) <= 1.0 + kMembershipTol;
}

HullDescription hull(const RootSystem& rs, const WeylGroup& w, const Functional& mu) {
    require_valid_mu(rs, mu);

    HullDescription out;
    out.facet_caps = mu.root_coords;
    for (std::size_t j = 0; j < w.elements.size(); ++j) {
        Eigen::VectorXd v = w.elements[j] * mu.std_coords;
        bool seen = false;
        for (const auto& prev : out.vertices)
            if (approx_equal(prev.std_coords, v, 1e-10)) {
                seen = true;
                break;
            }
        if (!seen) out.vertices.push_back(rs.from_std(v));
    }
    return out;
}

Functional intersect(const RootSystem& rs, const std::vector<Functional>& family) {
    if (family.empty()) throw ParameterError("intersect requires a nonempty family");
    for (const auto& mu : family)
        if (!rs.is_dominant(mu))
            throw PreconditionError("intersect requires dominant family members");

    Eigen::VectorXd c = family.front().root_coords;
    for (const auto& mu : family) c = c.cwiseMin(mu.root_coords);

    Functional result = rs.from_root_coords(c);
    if (!rs.is_dominant(result, 1e-9))
        throw NumericError("intersection lost dominance; inputs are inconsistent");
    return result;
}

OptimalPolyhedron optimal_polyhedron(const RootSystem& rs, const WeylGroup& w,
                                     const std::vector<DirectionalBound>& bounds) {
    if (bounds.empty()) throw ParameterError("optimal_polyhedron requires at least one bound");
    std::vector<Functional> scaled;
    scaled.reserve(bounds.size());
    for (const auto& b : bounds) {
        if (b.theta < 0.0) throw ParameterError("bound scale factors must be nonnegative");
        scaled.push_back(rs.scale(b.mu, b.theta));
    }
    OptimalPolyhedron out;
    out.mu = intersect(rs, scaled);
    out.hermitian = is_hermitian_dominant(rs, w, out.mu);
    return out;
}

}  // namespace polyspec
