#include <doctest.h>

#include <cmath>
#include <numbers>

#include "diagroof/convex_hull_1d.hpp"
#include "diagroof/diag_entanglement.hpp"
#include "diagroof/errors.hpp"

using namespace diagroof;

namespace {

SampledCurve sample(const std::function<double(double)>& f, double lo, double hi, int n) {
  Eigen::VectorXd xs = Eigen::VectorXd::LinSpaced(n, lo, hi);
  Eigen::VectorXd ys = xs.unaryExpr(f);
  return {xs, ys};
}

// O(n^3) oracle: the lower envelope at x_k is the smallest chord value over
// all pairs i <= k <= j.
Eigen::VectorXd brute_hull(const SampledCurve& c) {
  const auto& x = c.xs();
  const auto& y = c.ys();
  Eigen::VectorXd out = y;
  for (Eigen::Index i = 0; i < x.size(); ++i)
    for (Eigen::Index j = i + 1; j < x.size(); ++j)
      for (Eigen::Index k = i; k <= j; ++k) {
        const double t = (x[k] - x[i]) / (x[j] - x[i]);
        out[k] = std::min(out[k], (1 - t) * y[i] + t * y[j]);
      }
  return out;
}

}  // namespace

TEST_CASE("convex input is its own hull") {
  const auto c = sample([](double x) { return x * x; }, -1, 1, 101);
  const HullResult h = lower_convex_hull(c);
  CHECK((h.hull_ys - c.ys()).cwiseAbs().maxCoeff() == 0.0);
  CHECK(h.segments.empty());
}

TEST_CASE("concave input collapses to the chord") {
  const auto c = sample([](double x) { return -x * x; }, -1, 1, 41);
  const HullResult h = lower_convex_hull(c);
  CHECK((h.hull_ys.array() + 1.0).abs().maxCoeff() < 1e-15);
  REQUIRE(h.segments.size() == 1);
  CHECK(h.segments[0].first == -1.0);
  CHECK(h.segments[0].second == 1.0);
}

TEST_CASE("double well") {
  const auto c = sample([](double x) { return (x * x - 1) * (x * x - 1); }, -2, 2, 401);
  const HullResult h = lower_convex_hull(c);
  REQUIRE(h.segments.size() == 1);
  CHECK(h.segments[0].first == doctest::Approx(-1.0));
  CHECK(h.segments[0].second == doctest::Approx(1.0));
  for (Eigen::Index i = 0; i < c.size(); ++i)
    if (std::abs(c.xs()[i]) <= 1) CHECK(std::abs(h.hull_ys[i]) < 1e-12);
}

TEST_CASE("hull matches brute force, is idempotent and convex") {
  SplitMix64 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 5 + trial * 2;
    Eigen::VectorXd xs(n), ys(n);
    double x = 0;
    for (int i = 0; i < n; ++i) {
      x += 0.01 + rng.uniform();
      xs[i] = x;
      ys[i] = rng.uniform() * 2 - 1;
    }
    const SampledCurve c(xs, ys);
    const HullResult h = lower_convex_hull(c);
    CHECK((h.hull_ys - brute_hull(c)).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((h.hull_ys.array() <= ys.array() + 1e-15).all());
    const HullResult again = lower_convex_hull(SampledCurve(xs, h.hull_ys));
    CHECK((again.hull_ys - h.hull_ys).cwiseAbs().maxCoeff() < 1e-12);
    for (int i = 1; i + 1 < n; ++i) {
      const double left = (h.hull_ys[i] - h.hull_ys[i - 1]) / (xs[i] - xs[i - 1]);
      const double right = (h.hull_ys[i + 1] - h.hull_ys[i]) / (xs[i + 1] - xs[i]);
      CHECK(right >= left - 1e-9);
    }
  }
}

TEST_CASE("hull is monotone in the input") {
  SplitMix64 rng(22);
  const Eigen::VectorXd xs = Eigen::VectorXd::LinSpaced(60, 0, 1);
  Eigen::VectorXd f(60), g(60);
  for (int i = 0; i < 60; ++i) {
    f[i] = rng.uniform();
    g[i] = f[i] + rng.uniform() * 0.1;
  }
  const auto hf = lower_convex_hull(SampledCurve(xs, f)).hull_ys;
  const auto hg = lower_convex_hull(SampledCurve(xs, g)).hull_ys;
  CHECK((hf.array() <= hg.array() + 1e-15).all());
}

TEST_CASE("invalid samples") {
  CHECK_THROWS_AS(SampledCurve(Eigen::VectorXd::Zero(1), Eigen::VectorXd::Zero(1)), DomainError);
  CHECK_THROWS_AS(SampledCurve(Eigen::Vector3d(0, 1, 1), Eigen::Vector3d(0, 0, 0)), DomainError);
  CHECK_THROWS_AS(SampledCurve(Eigen::Vector3d(0, 1, 2), Eigen::Vector2d(0, 0)), DomainError);
}

TEST_CASE("tangent from a point") {
  // The line from (0, -1) touches x^2 at x = 1.
  const double t = tangent_from_point([](double x) { return x * x; }, 0.0, -1.0, {0.5, 3.0});
  CHECK(t == doctest::Approx(1.0).epsilon(1e-10));
  CHECK_THROWS_AS(tangent_from_point([](double x) { return x * x; }, 0.0, -1.0, {2.0, 3.0}), BracketError);
}

TEST_CASE("tangent to script_S from the z = -1/2 anchor") {
  const double zs = tangent_from_point(script_S, -0.5, std::numbers::ln2, {-0.45, -0.3});
  CHECK(zs == doctest::Approx(-0.40794967107153796).epsilon(1e-9));
  CHECK(script_S(zs) == doctest::Approx(0.4700163991487134).epsilon(1e-9));
}

TEST_CASE("tangent to script_S from the (1, ln 3) anchor lands on 5/6") {
  const double t = tangent_from_point(script_S, 1.0, std::log(3.0), {0.7, 0.95});
  CHECK(t == doctest::Approx(5.0 / 6.0).epsilon(1e-6));
}
