#include "polyspec/group.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

#include "polyspec/errors.hpp"

namespace polyspec {

namespace {

constexpr double kDetTol = 1e-9;

void check_unimodular(const Eigen::MatrixXd& m) {
    if (m.rows() != m.cols() || m.rows() < 2) throw ParameterError("matrix must be square, size >= 2");
    if (std::abs(m.determinant() - 1.0) > kDetTol)
        throw ParameterError("matrix determinant must be 1");
}

void check_unimodular(const RationalMatrix& m) {
    if (m.n < 2) throw ParameterError("matrix must be square, size >= 2");
    if (determinant(m) != 1) throw ParameterError("rational matrix determinant must be exactly 1");
}

Eigen::MatrixXd to_float(const RationalMatrix& m) {
    Eigen::MatrixXd f(m.n, m.n);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) f(i, j) = rational_to_double(m.at(i, j));
    return f;
}

}  // namespace

GroupElement make_sln(const Eigen::MatrixXd& m) {
    check_unimodular(m);
    GroupElement g;
    g.realization = Realization::SLn;
    g.factors = {m};
    return g;
}

GroupElement make_sln(const RationalMatrix& m) {
    check_unimodular(m);
    GroupElement g;
    g.realization = Realization::SLn;
    g.factors = {to_float(m)};
    g.exact = std::vector<RationalMatrix>{m};
    return g;
}

GroupElement make_product_sl2(const std::vector<Eigen::Matrix2d>& ms) {
    if (ms.empty()) throw ParameterError("product element needs at least one factor");
    GroupElement g;
    g.realization = Realization::ProductSL2;
    for (const auto& m : ms) {
        Eigen::MatrixXd f = m;
        check_unimodular(f);
        g.factors.push_back(std::move(f));
    }
    return g;
}

GroupElement make_product_sl2(const std::vector<RationalMatrix>& ms) {
    if (ms.empty()) throw ParameterError("product element needs at least one factor");
    GroupElement g;
    g.realization = Realization::ProductSL2;
    for (const auto& m : ms) {
        if (m.n != 2) throw ParameterError("product factors must be 2x2");
        check_unimodular(m);
        g.factors.push_back(to_float(m));
    }
    g.exact = ms;
    return g;
}

GroupElement multiply(const GroupElement& x, const GroupElement& y) {
    if (x.realization != y.realization || x.factor_count() != y.factor_count() || x.dim() != y.dim())
        throw ParameterError("cannot multiply elements of different realizations");
    GroupElement z;
    z.realization = x.realization;
    for (int i = 0; i < x.factor_count(); ++i) z.factors.push_back(x.factors[i] * y.factors[i]);
    if (x.exact && y.exact) {
        std::vector<RationalMatrix> e;
        for (int i = 0; i < x.factor_count(); ++i)
            e.push_back(polyspec::multiply((*x.exact)[i], (*y.exact)[i]));
        z.exact = std::move(e);
    }
    return z;
}

GroupElement inverse(const GroupElement& x) {
    GroupElement z;
    z.realization = x.realization;
    if (x.exact) {
        std::vector<RationalMatrix> e;
        for (const auto& f : *x.exact) e.push_back(exact_inverse(f));
        for (const auto& f : e) z.factors.push_back(to_float(f));
        z.exact = std::move(e);
    } else {
        for (const auto& f : x.factors) z.factors.push_back(f.inverse());
    }
    return z;
}

ScaledMatrix to_scaled(const Eigen::MatrixXd& m) {
    const double a = m.cwiseAbs().maxCoeff();
    if (!(a > 0.0) || !std::isfinite(a)) throw NumericError("matrix entries out of range");
    return {m / a, std::log(a)};
}

ScaledMatrix to_scaled(const RationalMatrix& m) {
    using boost::multiprecision::msb;
    // pull out a power of two first so that huge rationals survive the
    // conversion to double
    long e = 0;
    bool any = false;
    for (const auto& q : m.a) {
        if (q == 0) continue;
        const BigInt num = abs(numerator(q));
        const BigInt den = denominator(q);
        const long approx = static_cast<long>(msb(num)) - static_cast<long>(msb(den));
        e = any ? std::max(e, approx) : approx;
        any = true;
    }
    if (!any) throw NumericError("zero matrix has no Cartan data");

    Rational scale(1);
    if (e >= 0)
        scale = Rational(BigInt(1) << e);
    else
        scale = Rational(1, BigInt(1) << -e);

    Eigen::MatrixXd f(m.n, m.n);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) f(i, j) = rational_to_double(m.at(i, j) / scale);

    ScaledMatrix s = to_scaled(f);
    s.log_scale += static_cast<double>(e) * std::log(2.0);
    return s;
}

ScaledMatrix multiply(const ScaledMatrix& x, const ScaledMatrix& y) {
    ScaledMatrix z = to_scaled(Eigen::MatrixXd(x.m * y.m));
    z.log_scale += x.log_scale + y.log_scale;
    return z;
}

namespace {

// log of the top singular value of a 2x2 with determinant e^{-2*log_scale},
// from the Frobenius norm alone; immune to underflow of the small value.
double scaled_top_log_sv(const ScaledMatrix& f) {
    const double q = f.m.squaredNorm();
    const double det = f.m.determinant();
    const double disc = std::max(0.0, q * q - 4.0 * det * det);
    const double top_sq = 0.5 * (q + std::sqrt(disc));
    return f.log_scale + 0.5 * std::log(top_sq);
}

}  // namespace

Eigen::VectorXd scaled_cartan_projection(const std::vector<ScaledMatrix>& factors,
                                         Realization realization) {
    if (realization == Realization::ProductSL2) {
        Eigen::VectorXd u(factors.size());
        for (std::size_t i = 0; i < factors.size(); ++i)
            u(i) = std::max(0.0, scaled_top_log_sv(factors[i]));
        return u;
    }

    const ScaledMatrix& f = factors.front();
    const int n = static_cast<int>(f.m.rows());
    if (n == 2) {
        const double top = std::max(0.0, scaled_top_log_sv(f));
        Eigen::VectorXd out(2);
        out << top, -top;
        return out;
    }

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(f.m);
    Eigen::VectorXd out(n);
    for (int i = 0; i < n; ++i) {
        const double sv = svd.singularValues()(i);
        if (!(sv > 0.0)) throw NumericError("singular value underflow in Cartan projection");
        out(i) = f.log_scale + std::log(sv);
    }
    std::sort(out.data(), out.data() + n, std::greater<double>());
    return out;
}

Eigen::VectorXd cartan_projection(const GroupElement& g) {
    std::vector<ScaledMatrix> scaled;
    scaled.reserve(g.factors.size());
    for (const auto& f : g.factors) scaled.push_back(to_scaled(f));
    return scaled_cartan_projection(scaled, g.realization);
}

double iwasawa_a_part_sl2(const GroupElement& g) {
    if (g.factor_count() != 1 || g.dim() != 2)
        throw ParameterError("Iwasawa projection implemented for single SL_2 factors only");
    const Eigen::MatrixXd& m = g.factors.front();
    return std::log(std::hypot(m(0, 0), m(1, 0)));
}

ChamberVector embed_projection(const RootSystem& rs, Realization realization,
                               const Eigen::VectorXd& raw) {
    switch (rs.kind) {
        case PresetKind::ProductA1:
            if (realization == Realization::ProductSL2 && raw.size() == rs.rank)
                return ChamberVector{raw};
            if (realization == Realization::SLn && raw.size() == 2 && rs.rank == 1)
                return ChamberVector{raw.head(1)};
            break;
        case PresetKind::A2Family:
            if (realization == Realization::SLn && raw.size() == 3) {
                // isometry from trace-zero epsilon coordinates onto the A2
                // realization, matching simple roots to simple roots
                Eigen::Matrix<double, 2, 3> u;
                const double r2 = std::sqrt(2.0), r6 = std::sqrt(6.0);
                u << r2 / 2.0, -r2 / 2.0, 0.0,
                     r6 / 6.0, r6 / 6.0, -r6 / 3.0;
                return ChamberVector{u * raw};
            }
            break;
        case PresetKind::B2SO2n:
            break;  // no matrix realization is wired to this preset
    }
    throw ParameterError("group realization does not match the root-system preset");
}

}  // namespace polyspec
