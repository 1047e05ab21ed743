#include "diagroof/min_output.hpp"

#include <cmath>
#include <numbers>

#include "diagroof/errors.hpp"
#include "diagroof/golden.hpp"
#include "diagroof/lambert_w.hpp"
#include "diagroof/num_core.hpp"
#include "diagroof/rng.hpp"

namespace diagroof {

using std::numbers::ln2;
using std::numbers::pi;

FaceVector::FaceVector(Eigen::VectorXd amps) : amps_(std::move(amps)) {
  if (amps_.size() < 2) throw DomainError("FaceVector: need at least 2 components");
  if (std::abs(amps_.sum()) > 1e-12) throw DomainError("FaceVector: components must sum to 0");
  if (std::abs(amps_.squaredNorm() - 1.0) > 1e-12) throw DomainError("FaceVector: vector must have unit norm");
}

double face_output_entropy(const FaceVector& v) {
  double s = 0.0;
  for (double a : v.amps()) s += eta(std::min(a * a, 1.0));
  return s;
}

std::vector<double> StationaryRoots::roots() const {
  std::vector<double> out{x1};
  if (x2) out.push_back(*x2);
  if (x3) out.push_back(*x3);
  return out;
}

double one_vs_rest_entropy(int n) {
  if (n < 2) throw DomainError("one_vs_rest_entropy: N must be >= 2");
  const double big = n;
  return -std::log1p(-1.0 / big) + (2.0 / big) * std::log(big - 1.0);
}

double s_min_face(int n) {
  if (n < 2) throw DomainError("s_min_face: N must be >= 2");
  return n <= 6 ? ln2 : one_vs_rest_entropy(n);
}

std::vector<FaceVector> minimizer_states(int n) {
  if (n < 2) throw DomainError("minimizer_states: N must be >= 2");
  std::vector<FaceVector> out;
  if (n <= 6) {
    for (int j = 0; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
        v[j] = std::numbers::sqrt2 / 2.0;
        v[k] = -std::numbers::sqrt2 / 2.0;
        out.emplace_back(std::move(v));
      }
    }
  } else {
    const double a = 1.0 / std::sqrt(static_cast<double>(n) * (n - 1));
    for (int j = 0; j < n; ++j) {
      Eigen::VectorXd v = Eigen::VectorXd::Constant(n, -a);
      v[j] = (n - 1) * a;
      out.emplace_back(std::move(v));
    }
  }
  return out;
}

double s_of_Nn(int big_n, int n) {
  if (big_n < 2 || n < 1 || n > big_n - 1) throw DomainError("s_of_Nn: need 1 <= n <= N-1");
  const double nn = big_n;
  return std::log(nn) - (1.0 - 2.0 * n / nn) * std::log(nn / n - 1.0);
}

StationaryRoots lagrange_roots(double lambda, double mu) {
  if (lambda == 0.0) throw DomainError("lagrange_roots: lambda must be non-zero");
  const double zeta = std::abs(lambda) / 2.0 * std::exp(-mu / 2.0);
  StationaryRoots r{lambda, mu, zeta, lambda / (2.0 * w0(zeta)), std::nullopt, std::nullopt};
  if (zeta <= 1.0 / std::numbers::e || detail::at_branch_point(-zeta)) {
    r.x2 = lambda / (2.0 * w0(-zeta));
    r.x3 = lambda / (2.0 * wm1(-zeta));
  }
  return r;
}

double g_function(double zeta) {
  if (!(zeta > 0.0) || (zeta > 1.0 / std::numbers::e && !detail::at_branch_point(-zeta)))
    throw DomainError("g_function: zeta must lie in (0, 1/e]");
  return std::exp(2.0 * w0(zeta)) + std::exp(2.0 * w0(-zeta)) + std::exp(2.0 * wm1(-zeta));
}

namespace {

// Orthonormal basis of the zero-sum hyperplane (Helmert columns).
Eigen::MatrixXd zero_sum_basis(int n) {
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n, n - 1);
  for (int k = 1; k < n; ++k) {
    const double s = 1.0 / std::sqrt(static_cast<double>(k) * (k + 1));
    b.col(k - 1).head(k).setConstant(s);
    b(k, k - 1) = -k * s;
  }
  return b;
}

double entropy_of(const Eigen::VectorXd& a) {
  double s = 0.0;
  for (double x : a) s += eta(std::min(x * x, 1.0));
  return s;
}

struct Descent {
  Eigen::VectorXd coords;
  double value;
};

Descent descend(const Eigen::MatrixXd& basis, Eigen::VectorXd coords) {
  const Eigen::Index dim = coords.size();
  Eigen::VectorXd a = basis * coords;
  double value = entropy_of(a);
  if (dim < 2) return {coords, value};

  constexpr int kScan = 24;
  for (int sweep = 0; sweep < 10000; ++sweep) {
    const double start = value;
    for (Eigen::Index i = 0; i < dim - 1; ++i) {
      for (Eigen::Index j = i + 1; j < dim; ++j) {
        const Eigen::VectorXd u = basis.col(i) * coords[i] + basis.col(j) * coords[j];
        const Eigen::VectorXd w = basis.col(j) * coords[i] - basis.col(i) * coords[j];
        auto along = [&](double phi) { return entropy_of(a + (std::cos(phi) - 1.0) * u + std::sin(phi) * w); };

        const double step = 2.0 * pi / kScan;
        int best = 0;
        double best_val = value;
        for (int k = 1; k < kScan; ++k) {
          const double v = along(k * step);
          if (v < best_val) {
            best_val = v;
            best = k;
          }
        }
        const double centre = best * step;
        auto m = golden_section_minimize(along, centre - step, centre + step, 1e-10);
        if (m.value < value) {
          const double ci = coords[i];
          const double cj = coords[j];
          coords[i] = std::cos(m.x) * ci - std::sin(m.x) * cj;
          coords[j] = std::sin(m.x) * ci + std::cos(m.x) * cj;
          a = basis * coords;
          value = entropy_of(a);
        }
      }
    }
    if (start - value < 1e-12) break;
  }
  return {coords, value};
}

}  // namespace

FaceSearchResult brute_force_min_face(int n, int restarts, std::uint64_t seed) {
  if (n < 2) throw DomainError("brute_force_min_face: N must be >= 2");
  const Eigen::MatrixXd basis = zero_sum_basis(n);
  restarts = std::max(restarts, 1);

  std::optional<Descent> best;
  for (int r = 0; r < restarts; ++r) {
    SplitMix64 rng(seed, static_cast<std::uint64_t>(r));
    Eigen::VectorXd c(n - 1);
    for (Eigen::Index k = 0; k < c.size(); ++k) {
      // Box-Muller
      const double u1 = 1.0 - rng.uniform();
      const double u2 = rng.uniform();
      c[k] = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * pi * u2);
    }
    c.normalize();
    Descent d = descend(basis, std::move(c));
    if (!best || d.value < best->value) best = std::move(d);
  }

  Eigen::VectorXd a = basis * best->coords;
  a.array() -= a.mean();
  a.normalize();
  return {entropy_of(a), FaceVector(std::move(a))};
}

}  // namespace diagroof
