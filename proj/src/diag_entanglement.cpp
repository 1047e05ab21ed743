#include "diagroof/diag_entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "diagroof/convex_hull_1d.hpp"
#include "diagroof/golden.hpp"

namespace diagroof {

using std::numbers::ln2;
using std::numbers::pi;

namespace {

void check_z(double z, const char* who) {
  if (!(z >= -0.5 && z <= 1.0)) throw DomainError(std::string(who) + ": z must lie in [-1/2, 1]");
}

double theta_entropy(double z, double theta) {
  const ThetaPoint p = abc_from_theta(z, theta);
  return eta(p.a * p.a) + eta(p.b * p.b) + eta(p.c * p.c);
}

const double kLn3 = std::log(3.0);

}  // namespace

std::string_view to_string(EdRegion r) {
  switch (r) {
    case EdRegion::lower_linear: return "lower_linear";
    case EdRegion::roof_equals_epsilon: return "roof_equals_epsilon";
    case EdRegion::upper_linear: return "upper_linear";
  }
  return "unknown";
}

ComplexMatrix Decomposition::mixture() const {
  const Eigen::Index n = states.front().dim();
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (std::size_t j = 0; j < states.size(); ++j)
    m += weights[static_cast<Eigen::Index>(j)] * states[j].amps() * states[j].amps().adjoint();
  return m;
}

double Decomposition::average_output_entropy() const {
  double s = 0.0;
  for (std::size_t j = 0; j < states.size(); ++j) s += weights[static_cast<Eigen::Index>(j)] * output_entropy_D(states[j]);
  return s;
}

ThetaPoint abc_from_theta(double z, double theta) {
  check_z(z, "abc_from_theta");
  const double alpha = std::sqrt(2.0 * z + 1.0);
  const double beta = std::sqrt(1.0 - z);
  return {z, theta, (alpha + 2.0 * beta * std::cos(theta)) / 3.0, (alpha - 2.0 * beta * std::cos(theta - pi / 3.0)) / 3.0,
          (alpha - 2.0 * beta * std::cos(theta + pi / 3.0)) / 3.0};
}

EpsilonValue epsilon_of_z(double z) {
  check_z(z, "epsilon_of_z");
  if (z == 1.0) return {theta_entropy(z, 0.0), 0.0};

  // theta -> -theta and theta -> theta + 2pi/3 permute (a, b, c), so [0, pi/3]
  // is a fundamental domain.
  constexpr int kScan = 256;
  const double step = (pi / 3.0) / (kScan - 1);
  int best = 0;
  double best_val = theta_entropy(z, 0.0);
  for (int i = 1; i < kScan; ++i) {
    const double v = theta_entropy(z, i * step);
    if (v < best_val) {
      best_val = v;
      best = i;
    }
  }
  const double lo = std::max(0, best - 1) * step;
  const double hi = std::min(kScan - 1, best + 1) * step;
  auto refined = golden_section_minimize([z](double t) { return theta_entropy(z, t); }, lo, hi, 1e-12);

  EpsilonValue out{refined.value, refined.x};
  // prefer the exact symmetric points when they tie within rounding
  for (double edge : {0.0, pi / 3.0}) {
    const double v = theta_entropy(z, edge);
    if (v <= out.value + 1e-15) {
      out = {std::min(v, out.value), edge};
      break;
    }
  }
  if (out.theta_min > pi / 6.0) {
    // theta -> pi/3 - theta is a symmetry only when alpha = 0 (z = -1/2)
    const double mirrored = pi / 3.0 - out.theta_min;
    if (std::abs(theta_entropy(z, mirrored) - out.value) <= 1e-14) out.theta_min = mirrored;
  }
  return out;
}

double theta_transition() {
  auto departs = [](double z) { return epsilon_of_z(z).theta_min > 1e-6; };
  double lo = -0.45;  // departs
  double hi = -0.40;  // theta_min == 0
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    (departs(mid) ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double script_S(double z) {
  check_z(z, "script_S");
  const double alpha = std::sqrt(2.0 * z + 1.0);
  const double beta = std::sqrt(1.0 - z);
  const double small = (alpha - beta) * (alpha - beta) / 9.0;
  const double large = (alpha + 2.0 * beta) * (alpha + 2.0 * beta) / 9.0;
  return 2.0 * eta(small) + eta(std::min(large, 1.0));
}

double compute_zstar() {
  static const double zstar = tangent_from_point(script_S, -0.5, ln2, {-0.45, -0.3});
  return zstar;
}

EdRegion region_of_z(double z) {
  check_z(z, "region_of_z");
  if (z < compute_zstar()) return EdRegion::lower_linear;
  if (z <= kUpperJunction) return EdRegion::roof_equals_epsilon;
  return EdRegion::upper_linear;
}

double ed_of_z(double z) {
  check_z(z, "ed_of_z");
  const double zstar = compute_zstar();
  switch (region_of_z(z)) {
    case EdRegion::lower_linear: {
      const double p = (zstar - z) / (zstar + 0.5);
      return p * ln2 + (1.0 - p) * script_S(zstar);
    }
    case EdRegion::roof_equals_epsilon:
      return script_S(z);
    case EdRegion::upper_linear: {
      const double p = (1.0 - z) / (1.0 - kUpperJunction);
      return p * (kLn3 - ln2 / 3.0) + (1.0 - p) * kLn3;
    }
  }
  return script_S(z);
}

EDCurveRecord ed_record(double z) {
  const EpsilonValue eps = epsilon_of_z(z);
  return {z, eps.value, eps.theta_min, ed_of_z(z), region_of_z(z)};
}

std::array<PureState, 3> cyclic_orbit(double a, double b, double c) {
  return {PureState::from_real(Eigen::Vector3d(a, b, c)), PureState::from_real(Eigen::Vector3d(c, a, b)),
          PureState::from_real(Eigen::Vector3d(b, c, a))};
}

Decomposition optimal_decomposition(double z) {
  check_z(z, "optimal_decomposition");
  std::vector<double> weights;
  std::vector<PureState> states;
  auto add_orbit = [&](double weight, const ThetaPoint& p) {
    if (weight <= 0.0) return;
    for (auto& s : cyclic_orbit(p.a, p.b, p.c)) {
      weights.push_back(weight / 3.0);
      states.push_back(std::move(s));
    }
  };

  const double zstar = compute_zstar();
  switch (region_of_z(z)) {
    case EdRegion::lower_linear: {
      const double p = (zstar - z) / (zstar + 0.5);
      add_orbit(p, abc_from_theta(-0.5, pi / 6.0));
      add_orbit(1.0 - p, abc_from_theta(zstar, 0.0));
      break;
    }
    case EdRegion::roof_equals_epsilon:
      add_orbit(1.0, abc_from_theta(z, 0.0));
      break;
    case EdRegion::upper_linear: {
      const double p = (1.0 - z) / (1.0 - kUpperJunction);
      add_orbit(p, abc_from_theta(kUpperJunction, 0.0));
      if (p < 1.0) {
        weights.push_back(1.0 - p);
        states.push_back(PureState::from_real(Eigen::Vector3d(1.0, 1.0, 1.0)));
      }
      break;
    }
  }
  return {ProbVector(Eigen::Map<const Eigen::VectorXd>(weights.data(), static_cast<Eigen::Index>(weights.size()))),
          std::move(states)};
}

DensityMatrix rank2_state(double z, std::complex<double> x, std::complex<double> a, std::complex<double> b) {
  if (std::abs(std::norm(a) + std::norm(b) - 1.0) > 1e-12) throw DomainError("rank2: |a|^2 + |b|^2 must be 1");
  if (!(z >= 0.0 && z <= 1.0)) throw DomainError("rank2: z must lie in [0, 1]");
  if (std::norm(x) > z * (1.0 - z) + 1e-12) throw DomainError("rank2: |x|^2 exceeds z(1-z)");
  ComplexMatrix m(3, 3);
  m << 1.0 - z, x * a, x * b,                                 //
      std::conj(x) * std::conj(a), z * std::norm(a), z * std::conj(a) * b,  //
      std::conj(x) * std::conj(b), z * a * std::conj(b), z * std::norm(b);
  return DensityMatrix(m);
}

double rank2_ed(double z, std::complex<double> x, std::complex<double> a, std::complex<double> b) {
  rank2_state(z, x, a, b);
  const double lambda = std::sqrt(std::max(0.0, 1.0 - 4.0 * std::norm(x)));
  return eta((1.0 + lambda) / 2.0) + eta((1.0 - lambda) / 2.0) + z * eta(std::norm(a)) + z * eta(std::norm(b));
}

}  // namespace diagroof
