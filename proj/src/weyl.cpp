#include "polyspec/weyl.hpp"

#include <cmath>

#include "polyspec/errors.hpp"

namespace polyspec {

namespace {

constexpr double kMatchTol = 1e-10;

bool matrices_match(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    return (a - b).lpNorm<Eigen::Infinity>() <= kMatchTol;
}

}  // namespace

WeylGroup make_weyl_group(const RootSystem& rs, std::size_t max_elements) {
    const int r = rs.rank;

    std::vector<Eigen::MatrixXd> gens;
    gens.reserve(r);
    for (const auto& sr : rs.simple_roots) {
        const Eigen::VectorXd& a = sr.std_coords;
        gens.push_back(Eigen::MatrixXd::Identity(r, r) - (2.0 / a.squaredNorm()) * (a * a.transpose()));
    }

    WeylGroup w;
    w.elements.push_back(Eigen::MatrixXd::Identity(r, r));

    // breadth-first closure; dedup by matrix entries
    for (std::size_t next = 0; next < w.elements.size(); ++next) {
        for (const auto& g : gens) {
            Eigen::MatrixXd cand = g * w.elements[next];
            bool seen = false;
            for (const auto& e : w.elements)
                if (matrices_match(e, cand)) {
                    seen = true;
                    break;
                }
            if (!seen) {
                if (w.elements.size() >= max_elements)
                    throw ResourceError("Weyl group enumeration exceeded the element cap");
                w.elements.push_back(std::move(cand));
            }
        }
    }

    w.generator_index.resize(r, -1);
    for (int i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < w.elements.size(); ++j)
            if (matrices_match(w.elements[j], gens[i])) {
                w.generator_index[i] = static_cast<int>(j);
                break;
            }
        if (w.generator_index[i] < 0)
            throw NumericError("simple reflection missing from enumerated group");
    }

    // w0 is the unique element sending rho to -rho (rho is regular for every
    // preset, so the stabilizer argument applies)
    w.longest = -1;
    const Eigen::VectorXd& rho = rs.rho.std_coords;
    for (std::size_t j = 0; j < w.elements.size(); ++j)
        if ((w.elements[j] * rho + rho).lpNorm<Eigen::Infinity>() <= 1e-9) {
            w.longest = static_cast<int>(j);
            break;
        }
    if (w.longest < 0) throw NumericError("longest element not found");

    return w;
}

Functional weyl_apply(const RootSystem& rs, const WeylGroup& w, int idx, const Functional& f) {
    return rs.from_std(w.elements.at(idx) * f.std_coords);
}

ChamberVector weyl_apply(const WeylGroup& w, int idx, const ChamberVector& h) {
    return ChamberVector{w.elements.at(idx) * h.coords};
}

DominantProjection dominant_project(const RootSystem& rs, const WeylGroup& w, const Functional& f) {
    for (std::size_t j = 0; j < w.elements.size(); ++j) {
        Functional cand = rs.from_std(w.elements[j] * f.std_coords);
        if (rs.is_dominant(cand)) return {std::move(cand), static_cast<int>(j)};
    }
    throw NumericError("no Weyl image landed in the dominant cone");
}

Functional opposition(const RootSystem& rs, const WeylGroup& w, const Functional& f) {
    return rs.from_std(-(w.elements[w.longest] * f.std_coords));
}

ChamberVector opposition(const RootSystem& rs, const WeylGroup& w, const ChamberVector& h) {
    (void)rs;
    return ChamberVector{-(w.elements[w.longest] * h.coords)};
}

bool is_hermitian_dominant(const RootSystem& rs, const WeylGroup& w, const Functional& mu,
                           double tol) {
    if (!rs.is_dominant(mu))
        throw PreconditionError("is_hermitian_dominant requires a dominant functional");
    Functional image = opposition(rs, w, mu);
    return (image.std_coords - mu.std_coords).lpNorm<Eigen::Infinity>() <= tol;
}

bool limit_cone_criterion_applicable(const RootSystem& rs) {
    switch (rs.kind) {
        case PresetKind::A2Family:
            return false;
        case PresetKind::B2SO2n:
            return true;
        case PresetKind::ProductA1:
            return rs.rank >= 2;
    }
    return false;
}

}  // namespace polyspec
