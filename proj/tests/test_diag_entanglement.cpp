#include <doctest.h>

#include <cmath>
#include <numbers>

#include "diagroof/convex_hull_1d.hpp"
#include "diagroof/diag_entanglement.hpp"

using namespace diagroof;
using std::numbers::ln2;
using std::numbers::pi;

namespace {

const double kLn3 = std::log(3.0);
const double kZstar = -0.40794967107153796;

double entropy_at(double z, double theta) {
  const ThetaPoint p = abc_from_theta(z, theta);
  return eta(p.a * p.a) + eta(p.b * p.b) + eta(p.c * p.c);
}

// Second derivative at theta = 0 of the output entropy, by finite differences.
double curvature_at_zero(double z) {
  const double h = 1e-4;
  return (entropy_at(z, h) - 2 * entropy_at(z, 0) + entropy_at(z, -h)) / (h * h);
}

}  // namespace

TEST_CASE("abc_from_theta") {
  const ThetaPoint p0 = abc_from_theta(0.0, 0.0);
  CHECK(p0.a == doctest::Approx(1.0));
  CHECK(std::abs(p0.b) < 1e-15);
  CHECK(std::abs(p0.c) < 1e-15);

  const ThetaPoint p1 = abc_from_theta(1.0, 1.234);
  for (double v : {p1.a, p1.b, p1.c}) CHECK(v == doctest::Approx(1 / std::sqrt(3.0)));

  const ThetaPoint pm = abc_from_theta(-0.5, 0.0);
  CHECK(pm.a == doctest::Approx(2 / std::sqrt(6.0)));
  CHECK(pm.b == doctest::Approx(-1 / std::sqrt(6.0)));
  CHECK(pm.c == doctest::Approx(-1 / std::sqrt(6.0)));

  SplitMix64 rng(31);
  for (int k = 0; k < 500; ++k) {
    const double z = -0.5 + 1.5 * rng.uniform();
    const ThetaPoint p = abc_from_theta(z, 2 * pi * rng.uniform());
    CHECK(p.a * p.a + p.b * p.b + p.c * p.c == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(p.a * p.b + p.b * p.c + p.c * p.a == doctest::Approx(z).epsilon(1e-13));
  }
  CHECK_THROWS_AS(abc_from_theta(1.1, 0.0), DomainError);
  CHECK_THROWS_AS(abc_from_theta(-0.6, 0.0), DomainError);
}

TEST_CASE("epsilon examples") {
  const EpsilonValue e0 = epsilon_of_z(0.0);
  CHECK(std::abs(e0.value) < 1e-12);
  CHECK(e0.theta_min == 0.0);

  const EpsilonValue e56 = epsilon_of_z(5.0 / 6.0);
  CHECK(e56.value == doctest::Approx(kLn3 - ln2 / 3).epsilon(1e-12));
  CHECK(e56.value == doctest::Approx(0.867563).epsilon(1e-6));
  CHECK(e56.theta_min == 0.0);

  const EpsilonValue em = epsilon_of_z(-0.5);
  CHECK(em.value == doctest::Approx(ln2).epsilon(1e-12));
  CHECK(em.theta_min == doctest::Approx(pi / 6).epsilon(1e-6));

  CHECK(epsilon_of_z(1.0).value == doctest::Approx(kLn3));
  CHECK(epsilon_of_z(1.0).theta_min == 0.0);
}

TEST_CASE("epsilon against a dense angle scan") {
  for (int i = 0; i <= 60; ++i) {
    const double z = -0.5 + 1.5 * i / 60.0;
    double best = 1e9;
    for (int k = 0; k <= 20000; ++k) best = std::min(best, entropy_at(z, (pi / 3) * k / 20000.0));
    const EpsilonValue e = epsilon_of_z(z);
    CHECK(e.value <= best + 1e-12);
    CHECK(e.value >= best - 1e-7);
    CHECK(e.theta_min >= 0.0);
    CHECK(e.theta_min <= pi / 6 + 1e-12);
    CHECK(entropy_at(z, e.theta_min) == doctest::Approx(e.value).epsilon(1e-12));
  }
}

TEST_CASE("theta transition") {
  const double t = theta_transition();
  CHECK(t > -0.41503);
  CHECK(t < -0.41502);
  CHECK(t == doctest::Approx(-0.4150234).epsilon(1e-4));
  CHECK(epsilon_of_z(-0.40).theta_min == 0.0);
  CHECK(epsilon_of_z(-0.45).theta_min > 0.0);

  // Independent locator: the curvature at theta = 0 changes sign there.
  double lo = -0.45, hi = -0.40;
  REQUIRE(curvature_at_zero(lo) < 0);
  REQUIRE(curvature_at_zero(hi) > 0);
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    (curvature_at_zero(mid) < 0 ? lo : hi) = mid;
  }
  CHECK(std::abs(t - 0.5 * (lo + hi)) < 1e-6);
}

TEST_CASE("script_S") {
  CHECK(script_S(1.0) == doctest::Approx(kLn3));
  CHECK(std::abs(script_S(0.0)) < 1e-15);
  CHECK(script_S(kZstar) == doctest::Approx(0.470016).epsilon(1e-5));
  CHECK(script_S(5.0 / 6.0) == doctest::Approx(kLn3 - ln2 / 3).epsilon(1e-14));
  for (int i = 0; i <= 100; ++i) {
    const double z = -0.5 + 1.5 * i / 100.0;
    CHECK(script_S(z) == doctest::Approx(entropy_at(z, 0.0)).epsilon(1e-13));
  }
}

TEST_CASE("z*") {
  const double zs = compute_zstar();
  CHECK(std::abs(zs - (-0.4079496711)) < 1e-6);
  CHECK(zs == doctest::Approx(kZstar).epsilon(1e-9));
  CHECK(script_S(zs) == doctest::Approx(0.470016).epsilon(1e-5));
  const double h = 1e-6;
  const double slope = (script_S(zs + h) - script_S(zs - h)) / (2 * h);
  CHECK(slope == doctest::Approx((script_S(zs) - ln2) / (zs + 0.5)).epsilon(1e-6));
}

TEST_CASE("ed_of_z") {
  CHECK(ed_of_z(-0.5) == doctest::Approx(ln2).epsilon(1e-14));
  CHECK(std::abs(ed_of_z(0.0)) < 1e-15);
  CHECK(ed_of_z(1.0) == doctest::Approx(kLn3).epsilon(1e-14));
  CHECK_THROWS_AS(ed_of_z(1.0 + 1e-9), DomainError);
  CHECK_THROWS_AS(ed_of_z(-0.5 - 1e-9), DomainError);

  const double zs = compute_zstar();
  for (double j : {zs, kUpperJunction}) {
    const double below = ed_of_z(std::nextafter(j, -1.0));
    const double above = ed_of_z(std::nextafter(j, 2.0));
    CHECK(std::abs(below - ed_of_z(j)) < 1e-10);
    CHECK(std::abs(above - ed_of_z(j)) < 1e-10);
  }
  CHECK(region_of_z(-0.45) == EdRegion::lower_linear);
  CHECK(region_of_z(0.0) == EdRegion::roof_equals_epsilon);
  CHECK(region_of_z(0.9) == EdRegion::upper_linear);
  CHECK(to_string(EdRegion::upper_linear) == "upper_linear");
}

TEST_CASE("ed_of_z is the convex hull of epsilon") {
  const int n = 1351;
  Eigen::VectorXd xs = Eigen::VectorXd::LinSpaced(n, -0.5, 1.0), eps(n);
  for (int i = 0; i < n; ++i) eps[i] = epsilon_of_z(xs[i]).value;
  const HullResult h = lower_convex_hull(SampledCurve(xs, eps));
  double worst = 0;
  for (int i = 0; i < n; ++i) {
    const double ed = ed_of_z(xs[i]);
    worst = std::max(worst, std::abs(h.hull_ys[i] - ed));
    CHECK(eps[i] >= ed - 1e-9);
  }
  CHECK(worst < 2e-4);
  REQUIRE(h.segments.size() == 2);
  CHECK(h.segments[0].first == -0.5);
  CHECK(h.segments[0].second == doctest::Approx(compute_zstar()).epsilon(2e-3));
  CHECK(h.segments[1].first == doctest::Approx(kUpperJunction).epsilon(2e-3));
  CHECK(h.segments[1].second == 1.0);
}

TEST_CASE("epsilon is attained at theta = 0 on the middle piece") {
  const double zs = compute_zstar();
  for (int i = 0; i <= 200; ++i) {
    const double z = zs + (kUpperJunction - zs) * i / 200.0;
    const EpsilonValue e = epsilon_of_z(z);
    CHECK(e.theta_min == 0.0);
    CHECK(std::abs(e.value - script_S(z)) < 1e-10);
  }
}

TEST_CASE("optimal decomposition examples") {
  const Decomposition dm = optimal_decomposition(-0.5);
  REQUIRE(dm.states.size() == 3);
  const Eigen::Vector3d expected[] = {{1, 0, -1}, {0, -1, 1}, {-1, 1, 0}};
  for (const auto& e : expected) {
    const ComplexVector target = e.normalized().cast<std::complex<double>>();
    bool found = false;
    for (const auto& s : dm.states) found = found || std::abs(std::abs(target.dot(s.amps())) - 1) < 1e-9;
    CHECK(found);
  }

  const Decomposition d0 = optimal_decomposition(0.0);
  REQUIRE(d0.states.size() == 3);
  for (Eigen::Index j = 0; j < 3; ++j) {
    CHECK(d0.weights[j] == doctest::Approx(1.0 / 3));
    CHECK(d0.states[j].amps().cwiseAbs().maxCoeff() == doctest::Approx(1.0));
  }

  const Decomposition d1 = optimal_decomposition(1.0);
  REQUIRE(d1.states.size() == 1);
  CHECK((d1.states[0].amps().cwiseAbs() - Eigen::Vector3d::Constant(1 / std::sqrt(3.0))).norm() < 1e-15);
}

TEST_CASE("optimal decompositions reproduce omega and attain E_D") {
  const double zs = compute_zstar();
  for (int i = 0; i <= 150; ++i) {
    const double z = -0.5 + 1.5 * i / 150.0;
    const Decomposition d = optimal_decomposition(z);
    CHECK((d.mixture() - omega_of_z(z).matrix()).cwiseAbs().maxCoeff() < 1e-9);
    CHECK(d.average_output_entropy() == doctest::Approx(ed_of_z(z)).epsilon(1e-8));
    const std::size_t want = (z == -0.5 || (z >= zs && z <= kUpperJunction)) ? 3 : (z < zs ? 6 : 4);
    if (z < 1.0) CHECK(d.states.size() == want);

    double weighted = 0;
    for (std::size_t j = 0; j < d.states.size(); ++j) {
      const double zj = twirl_s3(pure_to_density(d.states[j])).z;
      weighted += d.weights[static_cast<Eigen::Index>(j)] * zj;
      const bool on_leaf = std::abs(zj - z) < 1e-12 || std::abs(zj + 0.5) < 1e-12 ||
                           std::abs(zj - zs) < 1e-12 || std::abs(zj - kUpperJunction) < 1e-12 ||
                           std::abs(zj - 1.0) < 1e-12;
      CHECK(on_leaf);
    }
    CHECK(weighted == doctest::Approx(z).epsilon(1e-12));
  }
}

TEST_CASE("cyclic orbit") {
  const auto orbit = cyclic_orbit(0.6, 0.8, 0.0);
  CHECK(orbit[1].amps()[0].real() == doctest::Approx(0.0));
  CHECK(orbit[1].amps()[1].real() == doctest::Approx(0.6));
  CHECK(orbit[2].amps()[0].real() == doctest::Approx(0.8));
}

TEST_CASE("rank-2 closed form") {
  using cd = std::complex<double>;
  const double s = 1 / std::sqrt(2.0);
  CHECK(rank2_ed(0.5, 0.0, s, s) == doctest::Approx(ln2 / 2));
  CHECK(rank2_ed(0.0, 0.0, 0.6, 0.8) == 0.0);

  for (double z : {0.1, 0.3, 0.5, 0.77}) {
    const double x = std::sqrt(z * (1 - z));
    const double lam = std::abs(1 - 2 * z);
    const double want = eta((1 + lam) / 2) + eta((1 - lam) / 2);
    CHECK(rank2_ed(z, x, 1.0, 0.0) == doctest::Approx(want).epsilon(1e-6));
    CHECK(output_entropy_D(rank2_state(z, x, 1.0, 0.0)) == doctest::Approx(want).epsilon(1e-6));
  }

  // Phases do not matter.
  CHECK(rank2_ed(0.4, cd(0.2, 0.3), cd(0, 0.6), cd(-0.8, 0)) ==
        doctest::Approx(rank2_ed(0.4, std::abs(cd(0.2, 0.3)), 0.6, 0.8)));

  CHECK_THROWS_AS(rank2_ed(0.5, 0.0, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(rank2_ed(0.5, 0.6, 1.0, 0.0), DomainError);
  CHECK_THROWS_AS(rank2_ed(1.2, 0.0, 1.0, 0.0), DomainError);
}
