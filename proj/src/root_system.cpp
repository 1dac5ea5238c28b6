#include "polyspec/root_system.hpp"

#include <cmath>
#include <sstream>

#include "polyspec/errors.hpp"

namespace polyspec {

namespace {

// Fills the derived matrices and recomputes rho as the multiplicity-weighted
// half sum of positive roots.
void finalize(RootSystem& rs) {
    const int r = rs.rank;
    rs.simple_root_mat.resize(r, r);
    for (int i = 0; i < r; ++i) rs.simple_root_mat.col(i) = rs.simple_roots[i].std_coords;

    const double det = rs.simple_root_mat.determinant();
    if (std::abs(det) < 1e-12)
        throw NumericError("simple roots are numerically dependent");
    rs.root_coords_mat = rs.simple_root_mat.inverse();

    rs.gram.resize(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            rs.gram(i, j) = rs.simple_roots[i].std_coords.dot(rs.simple_roots[j].std_coords);

    // alpha_j(h_i) = delta_ij, i.e. rows alpha_j^T times h_i; columns of the
    // inverse of the matrix whose rows are the simple roots.
    rs.coweights = rs.simple_root_mat.transpose().inverse();

    Eigen::VectorXd half_sum = Eigen::VectorXd::Zero(r);
    for (const auto& pr : rs.positive_roots)
        half_sum += 0.5 * pr.multiplicity * pr.functional.std_coords;
    rs.rho = rs.from_std(half_sum);

    for (auto& sr : rs.simple_roots) sr = rs.from_std(sr.std_coords);
    for (auto& pr : rs.positive_roots) pr.functional = rs.from_std(pr.functional.std_coords);
}

Functional bare(const Eigen::VectorXd& std_coords) {
    Functional f;
    f.std_coords = std_coords;
    return f;
}

}  // namespace

Functional RootSystem::from_std(const Eigen::VectorXd& std_coords) const {
    if (std_coords.size() != rank)
        throw ParameterError("functional has wrong dimension for this root system");
    Functional f;
    f.std_coords = std_coords;
    f.root_coords = root_coords_mat * std_coords;
    return f;
}

Functional RootSystem::from_root_coords(const Eigen::VectorXd& root_coords) const {
    if (root_coords.size() != rank)
        throw ParameterError("functional has wrong dimension for this root system");
    Functional f;
    f.root_coords = root_coords;
    f.std_coords = simple_root_mat * root_coords;
    return f;
}

Functional RootSystem::scale(const Functional& f, double t) const {
    Functional g;
    g.std_coords = t * f.std_coords;
    g.root_coords = t * f.root_coords;
    return g;
}

bool RootSystem::is_dominant(const Functional& f, double tol) const {
    for (const auto& sr : simple_roots)
        if (f.std_coords.dot(sr.std_coords) < -tol) return false;
    return true;
}

bool RootSystem::is_dominant_chamber(const ChamberVector& h, double tol) const {
    if (h.coords.size() != rank)
        throw ParameterError("chamber vector has wrong dimension for this root system");
    for (const auto& sr : simple_roots)
        if (sr.std_coords.dot(h.coords) < -tol) return false;
    return true;
}

ChamberVector RootSystem::coweight_ray(int i) const {
    if (i < 0 || i >= rank) throw ParameterError("coweight index out of range");
    return ChamberVector{coweights.col(i)};
}

std::string RootSystem::describe() const {
    std::ostringstream os;
    switch (kind) {
        case PresetKind::A2Family:
            os << "A2_family(m=" << a2_multiplicity << ")";
            break;
        case PresetKind::B2SO2n:
            os << "B2_SO2n(n=" << b2_n << ")";
            break;
        case PresetKind::ProductA1: {
            os << "ProductA1(k=" << product_rhos.size() << ", rhos=(";
            for (std::size_t i = 0; i < product_rhos.size(); ++i)
                os << (i ? "," : "") << product_rhos[i];
            os << "))";
            break;
        }
    }
    return os.str();
}

A2BuildResult make_a2_family(double m) {
    if (!(m > 0.0)) throw ParameterError("A2 family multiplicity must be positive");

    RootSystem rs;
    rs.kind = PresetKind::A2Family;
    rs.rank = 2;
    rs.a2_multiplicity = m;

    // |alpha_i|^2 = 2 with a 120 degree angle; alpha3 = alpha1 + alpha2
    Eigen::VectorXd a1(2), a2(2);
    a1 << std::sqrt(2.0), 0.0;
    a2 << -std::sqrt(2.0) / 2.0, std::sqrt(6.0) / 2.0;
    rs.simple_roots = {bare(a1), bare(a2)};
    rs.positive_roots = {{bare(a1), m}, {bare(a2), m}, {bare(a1 + a2), m}};
    finalize(rs);

    A2BuildResult out{std::move(rs), std::nullopt};
    if (m != 1.0 && m != 2.0 && m != 4.0 && m != 8.0)
        out.warning = "multiplicity outside {1,2,4,8} does not correspond to a symmetric space";
    return out;
}

RootSystem make_b2_so2n(int n) {
    if (n < 3) throw ParameterError("B2 preset requires n >= 3");

    RootSystem rs;
    rs.kind = PresetKind::B2SO2n;
    rs.rank = 2;
    rs.b2_n = n;

    Eigen::VectorXd a1(2), a2(2), a3(2), a4(2);
    a1 << 1.0, -1.0;
    a2 << 0.0, 1.0;
    a3 << 1.0, 0.0;
    a4 << 1.0, 1.0;
    rs.simple_roots = {bare(a1), bare(a2)};
    const double side = n - 2;
    rs.positive_roots = {{bare(a1), 1}, {bare(a2), side}, {bare(a3), side}, {bare(a4), 1}};
    finalize(rs);
    return rs;
}

RootSystem make_product_a1(const std::vector<double>& rhos) {
    if (rhos.empty()) throw ParameterError("ProductA1 preset requires at least one factor");
    for (double r : rhos)
        if (!(r > 0.0)) throw ParameterError("ProductA1 factor rho values must be positive");

    RootSystem rs;
    rs.kind = PresetKind::ProductA1;
    rs.rank = static_cast<int>(rhos.size());
    rs.product_rhos = rhos;

    for (int i = 0; i < rs.rank; ++i) {
        Eigen::VectorXd a = Eigen::VectorXd::Zero(rs.rank);
        a(i) = 2.0 * rhos[i];
        rs.simple_roots.push_back(bare(a));
        rs.positive_roots.push_back({bare(a), 1});
    }
    finalize(rs);
    return rs;
}

}  // namespace polyspec
