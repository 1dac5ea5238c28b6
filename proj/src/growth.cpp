#include "polyspec/growth.hpp"

#include <algorithm>
#include <cmath>

#include "polyspec/errors.hpp"

namespace polyspec {

namespace {

struct FitResult {
    double slope = 0.0;
    double residual = 0.0;
};

// least squares on (x, y); caller guarantees at least two distinct x
FitResult fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double denom = n * sxx - sx * sx;
    if (denom <= 0.0) throw InsufficientDataError("fit window has no spread in T");
    FitResult r;
    r.slope = (n * sxy - sx * sy) / denom;
    const double intercept = (sy - r.slope * sx) / n;
    double ss = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double e = y[i] - (intercept + r.slope * x[i]);
        ss += e * e;
    }
    r.residual = std::sqrt(ss / n);
    return r;
}

FitWindow resolve_window(std::optional<FitWindow> window, double fraction, double t_lo,
                         double t_hi) {
    if (window) {
        if (!(window->lo < window->hi)) throw ParameterError("fit window must have lo < hi");
        return *window;
    }
    if (!(fraction > 0.0 && fraction <= 1.0))
        throw ParameterError("fit window fraction must lie in (0, 1]");
    return {t_hi - fraction * (t_hi - t_lo), t_hi};
}

}  // namespace

GrowthEstimate critical_exponent(const OrbitData& data, const RootSystem& rs, const Functional& mu,
                                 ExponentMode mode, std::optional<FitWindow> window,
                                 double window_fraction) {
    if (data.samples.empty()) throw InsufficientDataError("no samples");
    if (!rs.is_dominant(mu)) throw PreconditionError("critical_exponent requires a dominant mu");

    GrowthEstimate est;
    est.quantity = mode == ExponentMode::Plain ? GrowthQuantity::Delta : GrowthQuantity::DeltaPrime;
    est.total_samples = static_cast<int>(data.samples.size());
    for (int i = 0; i < rs.rank; ++i)
        if (mu(rs.coweight_ray(i)) <= 1e-12) est.degenerate_mu = true;

    // (T, weight) with weight used only by the modified mode
    std::vector<std::pair<double, double>> ts;
    ts.reserve(data.samples.size());
    for (const auto& s : data.samples) {
        const ChamberVector h = embed_projection(rs, data.realization, s.mu_plus);
        ts.emplace_back(mu(h), mode == ExponentMode::Modified ? std::exp(-rs.rho(h)) : 1.0);
    }
    std::sort(ts.begin(), ts.end());

    const FitWindow win = resolve_window(window, window_fraction, ts.front().first, ts.back().first);
    est.window = win;

    std::vector<double> xs, ys;
    double acc = 0.0;
    std::size_t i = 0;
    int in_window = 0;
    while (i < ts.size()) {
        const double t = ts[i].first;
        // fold ties so each T value appears once with the full count
        while (i < ts.size() && ts[i].first == t) {
            acc += ts[i].second;
            if (t >= win.lo && t <= win.hi) ++in_window;
            ++i;
        }
        if (t >= win.lo && t <= win.hi) {
            xs.push_back(t);
            ys.push_back(std::log(acc));
        }
    }
    est.window_samples = in_window;
    if (in_window < kMinWindowSamples)
        throw InsufficientDataError("fewer than 30 samples in the fit window");

    const FitResult fit = fit_line(xs, ys);
    est.value = fit.slope;
    est.residual = fit.residual;
    return est;
}

GrowthEstimate directional_growth(const OrbitData& data, const Eigen::VectorXd& direction,
                                  double aperture, std::optional<FitWindow> window,
                                  double window_fraction) {
    if (data.samples.empty()) throw InsufficientDataError("no samples");
    if (std::abs(direction.norm() - 1.0) > 1e-9)
        throw ParameterError("direction must be a unit vector");
    if (!(aperture > 0.0)) throw ParameterError("aperture must be positive");
    if (direction.size() != data.samples.front().mu_plus.size())
        throw ParameterError("direction dimension does not match the samples");

    // closed-chamber check in raw realization coordinates
    if (data.realization == Realization::SLn) {
        for (int i = 0; i + 1 < direction.size(); ++i)
            if (direction(i) < direction(i + 1) - 1e-9)
                throw PreconditionError("direction must lie in the closed chamber");
    } else {
        if (direction.minCoeff() < -1e-9)
            throw PreconditionError("direction must lie in the closed chamber");
    }

    GrowthEstimate est;
    est.quantity = GrowthQuantity::PsiDirectional;
    est.total_samples = static_cast<int>(data.samples.size());

    const double cos_aperture = std::cos(aperture);
    std::vector<double> all_r, cone_r;
    for (const auto& s : data.samples) {
        const double r = s.mu_plus.norm();
        all_r.push_back(r);
        if (r > 0.0 && s.mu_plus.dot(direction) >= cos_aperture * r) cone_r.push_back(r);
    }
    std::sort(cone_r.begin(), cone_r.end());

    const double r_hi = *std::max_element(all_r.begin(), all_r.end());
    const double r_lo = *std::min_element(all_r.begin(), all_r.end());
    const FitWindow win = resolve_window(window, window_fraction, r_lo, r_hi);
    est.window = win;

    const auto beyond = std::lower_bound(cone_r.begin(), cone_r.end(), win.lo);
    if (beyond == cone_r.end()) {
        est.minus_infinity = true;
        return est;
    }

    std::vector<double> xs, ys;
    std::size_t i = 0;
    int in_window = 0;
    while (i < cone_r.size()) {
        const double r = cone_r[i];
        while (i < cone_r.size() && cone_r[i] == r) {
            if (r >= win.lo && r <= win.hi) ++in_window;
            ++i;
        }
        if (r >= win.lo && r <= win.hi) {
            xs.push_back(r);
            ys.push_back(std::log(static_cast<double>(i)));  // i = count of cone samples <= r
        }
    }
    est.window_samples = in_window;
    if (in_window < kMinWindowSamples)
        throw InsufficientDataError("fewer than 30 cone samples in the fit window");

    const FitResult fit = fit_line(xs, ys);
    est.value = fit.slope;
    est.residual = fit.residual;
    return est;
}

LimitConeStats limit_cone_stats(const OrbitData& data, double radius_threshold) {
    if (!(radius_threshold > 0.0)) throw ParameterError("radius threshold must be positive");

    LimitConeStats stats;
    stats.min_wall_distance = std::numeric_limits<double>::max();
    for (const auto& s : data.samples) {
        const double r = s.mu_plus.norm();
        if (r < radius_threshold) continue;
        Eigen::VectorXd dir = s.mu_plus / r;
        double wall = std::numeric_limits<double>::max();
        if (data.realization == Realization::SLn) {
            for (int i = 0; i + 1 < dir.size(); ++i) wall = std::min(wall, dir(i) - dir(i + 1));
        } else {
            wall = dir.minCoeff();
        }
        stats.min_wall_distance = std::min(stats.min_wall_distance, wall);
        stats.directions.push_back(std::move(dir));
    }
    if (stats.directions.empty())
        throw InsufficientDataError("no samples beyond the radius threshold");
    return stats;
}

}  // namespace polyspec
