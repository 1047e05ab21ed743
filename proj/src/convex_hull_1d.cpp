#include "diagroof/convex_hull_1d.hpp"

#include <cmath>

#include "diagroof/errors.hpp"

namespace diagroof {

SampledCurve::SampledCurve(Eigen::VectorXd xs, Eigen::VectorXd ys) : xs_(std::move(xs)), ys_(std::move(ys)) {
  if (xs_.size() < 2) throw DomainError("SampledCurve: need at least 2 points");
  if (xs_.size() != ys_.size()) throw DomainError("SampledCurve: xs and ys differ in length");
  for (Eigen::Index i = 1; i < xs_.size(); ++i)
    if (!(xs_[i] > xs_[i - 1])) throw DomainError("SampledCurve: xs must be strictly increasing");
}

HullResult lower_convex_hull(const SampledCurve& curve) {
  const auto& xs = curve.xs();
  const auto& ys = curve.ys();
  const Eigen::Index n = curve.size();

  // cross > 0 means a counter-clockwise (convex from below) turn o -> a -> b
  auto cross = [&](Eigen::Index o, Eigen::Index a, Eigen::Index b) {
    return (xs[a] - xs[o]) * (ys[b] - ys[o]) - (ys[a] - ys[o]) * (xs[b] - xs[o]);
  };

  std::vector<Eigen::Index> hull;
  for (Eigen::Index i = 0; i < n; ++i) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), i) <= 0.0) hull.pop_back();
    hull.push_back(i);
  }

  HullResult out{Eigen::VectorXd(n), {}};
  for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
    const Eigen::Index a = hull[k];
    const Eigen::Index b = hull[k + 1];
    out.hull_ys[a] = ys[a];
    for (Eigen::Index i = a + 1; i < b; ++i) {
      const double t = (xs[i] - xs[a]) / (xs[b] - xs[a]);
      out.hull_ys[i] = std::min(ys[i], (1.0 - t) * ys[a] + t * ys[b]);
    }
  }
  out.hull_ys[n - 1] = ys[n - 1];

  for (Eigen::Index i = 0; i < n;) {
    if (ys[i] - out.hull_ys[i] > kSegmentThreshold) {
      Eigen::Index j = i;
      while (j + 1 < n && ys[j + 1] - out.hull_ys[j + 1] > kSegmentThreshold) ++j;
      // end points are never below the hull
      out.segments.emplace_back(xs[i - 1], xs[j + 1]);
      i = j + 1;
    } else {
      ++i;
    }
  }
  return out;
}

double tangent_from_point(const std::function<double(double)>& f, double x0, double f0,
                          std::pair<double, double> bracket) {
  auto deriv = [&](double t) {
    const double h = 1e-6 * (1.0 + std::abs(t));
    return (f(t + h) - f(t - h)) / (2.0 * h);
  };
  auto g = [&](double t) { return deriv(t) * (t - x0) - (f(t) - f0); };

  double lo = bracket.first;
  double hi = bracket.second;
  double glo = g(lo);
  const double ghi = g(hi);
  if (!(glo * ghi <= 0.0)) throw BracketError("tangent_from_point: no sign change on bracket");
  if (glo == 0.0) return lo;
  if (ghi == 0.0) return hi;

  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    const double gm = g(mid);
    if (gm == 0.0) return mid;
    if ((gm < 0.0) == (glo < 0.0)) {
      lo = mid;
      glo = gm;
    } else {
      hi = mid;
    }
  }

  double t = 0.5 * (lo + hi);
  double gt = g(t);
  for (int k = 0; k < 3; ++k) {
    const double h = 1e-6 * (1.0 + std::abs(t));
    const double slope = (g(t + h) - g(t - h)) / (2.0 * h);
    if (slope == 0.0 || !std::isfinite(slope)) break;
    const double next = t - gt / slope;
    if (!(next >= bracket.first && next <= bracket.second)) break;
    const double gn = g(next);
    if (std::abs(gn) >= std::abs(gt)) break;
    t = next;
    gt = gn;
  }
  return t;
}

}  // namespace diagroof
