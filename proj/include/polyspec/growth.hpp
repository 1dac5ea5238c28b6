#pragma once

#include <optional>

#include "polyspec/orbit.hpp"
#include "polyspec/weyl.hpp"

namespace polyspec {

enum class ExponentMode { Plain, Modified };
enum class GrowthQuantity { Delta, DeltaPrime, PsiDirectional };

struct FitWindow {
    double lo = 0.0;
    double hi = 0.0;
};

// Slope-fit estimate of a counting exponent. `minus_infinity` marks a count
// that stays bounded (directional cones missing the orbit); serialized output
// writes the sentinel, never a float infinity. The residual is reported even
// when the fit looks good: truncated balls bias the tail and the residual is
// the only visible trace of that.
struct GrowthEstimate {
    GrowthQuantity quantity = GrowthQuantity::Delta;
    double value = 0.0;
    bool minus_infinity = false;
    FitWindow window;
    double residual = 0.0;
    int window_samples = 0;
    int total_samples = 0;
    bool degenerate_mu = false;  // mu vanishes on part of the chamber
};

inline constexpr int kMinWindowSamples = 30;
inline constexpr double kDefaultWindowFraction = 0.6;

// Counting-function slope of the samples against T = mu(mu_plus). Plain mode
// fits log N(T); modified mode fits the log of the e^{-rho(mu_plus)}-weighted
// count, which lowers the exponent by one when mu = rho. The shift is
// asymptotic: the weighted partial sums carry an additive constant from the
// low-radius samples, so the fit window must sit where the counts have
// outgrown it.
GrowthEstimate critical_exponent(const OrbitData& data, const RootSystem& rs, const Functional& mu,
                                 ExponentMode mode,
                                 std::optional<FitWindow> window = std::nullopt,
                                 double window_fraction = kDefaultWindowFraction);

// Growth rate of the cone count around `direction` (unit vector in raw
// realization coordinates, in the closed chamber) with the given angular
// aperture.
GrowthEstimate directional_growth(const OrbitData& data, const Eigen::VectorXd& direction,
                                  double aperture,
                                  std::optional<FitWindow> window = std::nullopt,
                                  double window_fraction = kDefaultWindowFraction);

struct LimitConeStats {
    std::vector<Eigen::VectorXd> directions;  // unit vectors, sample order
    double min_wall_distance = 0.0;
};

// Directions of the samples outside the given radius, plus the smallest
// simple-root value seen among them: a heuristic for whether the limit cone
// stays away from the chamber walls.
LimitConeStats limit_cone_stats(const OrbitData& data, double radius_threshold);

}  // namespace polyspec
