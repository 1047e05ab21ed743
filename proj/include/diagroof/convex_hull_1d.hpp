#pragma once

#include <functional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace diagroof {

/// Samples of a real function on a strictly increasing grid (>= 2 points).
class SampledCurve {
public:
  SampledCurve(Eigen::VectorXd xs, Eigen::VectorXd ys);

  const Eigen::VectorXd& xs() const { return xs_; }
  const Eigen::VectorXd& ys() const { return ys_; }
  Eigen::Index size() const { return xs_.size(); }

private:
  Eigen::VectorXd xs_;
  Eigen::VectorXd ys_;
};

struct HullResult {
  Eigen::VectorXd hull_ys;
  /// Linear pieces where the hull lies strictly below the curve, reported by
  /// their end points (the hull vertices on either side).
  std::vector<std::pair<double, double>> segments;
};

/// Curve minus hull above this counts as "strictly below".
inline constexpr double kSegmentThreshold = 1e-9;

/// Lower convex envelope via monotone chain, interpolated back onto xs.
HullResult lower_convex_hull(const SampledCurve& curve);

/// Abscissa t in `bracket` where the line through (x0, f0) touches f, i.e.
/// the root of f'(t)(t - x0) - (f(t) - f0). f' is a central difference with
/// step 1e-6 (1 + |t|). Throws BracketError without a sign change.
double tangent_from_point(const std::function<double(double)>& f, double x0, double f0,
                          std::pair<double, double> bracket);

}  // namespace diagroof
