#include "diagroof/roof_oracle.hpp"

#include <cmath>
#include <functional>
#include <numbers>

#include "diagroof/golden.hpp"
#include "diagroof/rng.hpp"

namespace diagroof {

using std::numbers::pi;
using cd = std::complex<double>;

IsometryParam IsometryParam::zeros(int m, int r, bool complex) {
  if (r < 1 || m < r) throw DomainError("IsometryParam: need 1 <= r <= m");
  return {m, r, complex, Eigen::VectorXd::Zero(angle_count(m, r, complex))};
}

IsometryParam IsometryParam::grown(int new_m) const {
  if (new_m < m) throw DomainError("IsometryParam::grown: cannot shrink");
  IsometryParam out = zeros(new_m, r, complex);
  const int per_pair = complex ? 2 : 1;
  int src = 0;
  int dst = 0;
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < new_m; ++j, dst += per_pair) {
      if (j < m) {
        out.angles.segment(dst, per_pair) = angles.segment(src, per_pair);
        src += per_pair;
      }
    }
  }
  if (complex) out.angles.tail(r) = angles.tail(r);
  return out;
}

ComplexMatrix isometry_from_param(const IsometryParam& p) {
  if (p.angles.size() != IsometryParam::angle_count(p.m, p.r, p.complex))
    throw DomainError("isometry_from_param: wrong number of angles");
  ComplexMatrix u = ComplexMatrix::Identity(p.m, p.r);
  if (p.complex)
    for (int k = 0; k < p.r; ++k) u.col(k) *= std::polar(1.0, p.angles[p.angles.size() - p.r + k]);

  Eigen::Index idx = 0;
  for (int i = 0; i < p.r; ++i) {
    for (int j = i + 1; j < p.m; ++j) {
      const double theta = p.angles[idx++];
      const cd phase = p.complex ? std::polar(1.0, p.angles[idx++]) : cd(1.0);
      if (theta == 0.0) continue;
      const double c = std::cos(theta);
      const double s = std::sin(theta);
      const Eigen::RowVectorXcd ri = u.row(i);
      const Eigen::RowVectorXcd rj = u.row(j);
      u.row(i) = c * ri - s * phase * rj;
      u.row(j) = s * std::conj(phase) * ri + c * rj;
    }
  }
  return u;
}

namespace {

constexpr double kRankThreshold = 1e-10;
constexpr double kDropWeight = 1e-12;

// Rows of E Lambda^{1/2} transposed: the r x N factor W with omega = W^H W.
struct Factor {
  ComplexMatrix w;
  int rank;
};

Factor factorize(const DensityMatrix& omega) {
  const HermitianEigen eig = hermitian_eigen(omega.hermitian());
  std::vector<Eigen::Index> keep;
  for (Eigen::Index k = 0; k < eig.values.size(); ++k)
    if (eig.values[k] > kRankThreshold) keep.push_back(k);
  ComplexMatrix w(static_cast<Eigen::Index>(keep.size()), omega.dim());
  for (std::size_t row = 0; row < keep.size(); ++row) {
    const Eigen::Index k = keep[row];
    w.row(static_cast<Eigen::Index>(row)) = std::sqrt(eig.values[k]) * eig.vectors.col(k).transpose();
  }
  return {w, static_cast<int>(keep.size())};
}

// Unnormalized vectors v_j as rows: conj(U) W.
ComplexMatrix mixture_rows(const ComplexMatrix& u, const ComplexMatrix& w) { return u.conjugate() * w; }

// sum_j p_j S(Phi_D(v_j / |v_j|)) = sum_j [sum_i eta(|v_ji|^2) - eta(p_j)]
double objective(const ComplexMatrix& rows) {
  double s = 0.0;
  for (Eigen::Index j = 0; j < rows.rows(); ++j) {
    double p = 0.0;
    for (Eigen::Index i = 0; i < rows.cols(); ++i) {
      const double x = std::norm(rows(j, i));
      p += x;
      if (x > 0.0) s -= x * std::log(x);
    }
    if (p > 0.0) s += p * std::log(p);
  }
  return s;
}

Decomposition decomposition_from_rows(const ComplexMatrix& rows) {
  std::vector<double> weights;
  std::vector<PureState> states;
  for (Eigen::Index j = 0; j < rows.rows(); ++j) {
    const double p = rows.row(j).squaredNorm();
    if (p < kDropWeight) continue;
    weights.push_back(p);
    states.push_back(PureState::normalized(ComplexVector(rows.row(j).transpose())));
  }
  Eigen::VectorXd pw = Eigen::Map<const Eigen::VectorXd>(weights.data(), static_cast<Eigen::Index>(weights.size()));
  pw /= pw.sum();
  return {ProbVector(std::move(pw)), std::move(states)};
}

struct Candidate {
  IsometryParam param;
  double value;
};

using Objective = std::function<double(const Eigen::VectorXd&)>;

// One cyclic pass: 12-point scan plus golden-section refinement per angle.
double coordinate_sweep(const Objective& eval, Eigen::VectorXd& x, double value) {
  constexpr int kScan = 12;
  const double step = 2.0 * pi / kScan;
  for (Eigen::Index k = 0; k < x.size(); ++k) {
    const double origin = x[k];
    auto along = [&](double t) {
      x[k] = t;
      return eval(x);
    };
    int best = 0;
    double best_val = value;
    for (int s = 1; s < kScan; ++s) {
      const double v = along(origin + s * step);
      if (v < best_val) {
        best_val = v;
        best = s;
      }
    }
    const double centre = origin + best * step;
    const auto m = golden_section_minimize(along, centre - step, centre + step, 1e-10);
    if (m.value < value) {
      x[k] = std::remainder(m.x, 2.0 * pi);
      value = m.value;
    } else {
      x[k] = origin;
    }
  }
  return value;
}

Eigen::VectorXd fd_gradient(const Objective& eval, Eigen::VectorXd x) {
  Eigen::VectorXd g(x.size());
  for (Eigen::Index k = 0; k < x.size(); ++k) {
    const double orig = x[k];
    const double h = 1e-7;
    x[k] = orig + h;
    const double up = eval(x);
    x[k] = orig - h;
    const double down = eval(x);
    x[k] = orig;
    g[k] = (up - down) / (2.0 * h);
  }
  return g;
}

// BFGS with Armijo backtracking; returns the improved value.
double bfgs_polish(const Objective& eval, Eigen::VectorXd& x, double value) {
  const Eigen::Index n = x.size();
  Eigen::MatrixXd hinv = Eigen::MatrixXd::Identity(n, n);
  Eigen::VectorXd g = fd_gradient(eval, x);
  for (int it = 0; it < 400 && g.norm() > 1e-9; ++it) {
    Eigen::VectorXd dir = -hinv * g;
    if (dir.dot(g) >= 0.0) {
      hinv.setIdentity();
      dir = -g;
    }
    double t = 1.0;
    Eigen::VectorXd next;
    double next_val = value;
    for (int ls = 0; ls < 40; ++ls, t *= 0.5) {
      next = x + t * dir;
      next_val = eval(next);
      if (next_val <= value + 1e-4 * t * dir.dot(g)) break;
    }
    if (!(next_val < value)) break;
    const Eigen::VectorXd g_next = fd_gradient(eval, next);
    const Eigen::VectorXd s = next - x;
    const Eigen::VectorXd y = g_next - g;
    const double sy = s.dot(y);
    if (sy > 1e-16) {
      const double rho = 1.0 / sy;
      const Eigen::MatrixXd left = Eigen::MatrixXd::Identity(n, n) - rho * s * y.transpose();
      hinv = left * hinv * left.transpose() + rho * s * s.transpose();
    }
    const bool stalled = value - next_val < 1e-15;
    x = std::move(next);
    value = next_val;
    g = g_next;
    if (stalled) break;
  }
  return value;
}

Candidate local_search(const ComplexMatrix& w, IsometryParam param) {
  const Objective eval = [&](const Eigen::VectorXd& angles) {
    IsometryParam p{param.m, param.r, param.complex, angles};
    return objective(mixture_rows(isometry_from_param(p), w));
  };
  Eigen::VectorXd x = param.angles;
  double value = eval(x);
  for (int round = 0; round < 200; ++round) {
    const double start = value;
    value = coordinate_sweep(eval, x, value);
    value = bfgs_polish(eval, x, value);
    if (start - value < 1e-11) break;
  }
  x = x.unaryExpr([](double a) { return std::remainder(a, 2.0 * pi); });
  value = eval(x);
  return {IsometryParam{param.m, param.r, param.complex, std::move(x)}, value};
}

RoofEstimate search(const DensityMatrix& omega, const RoofSearchOptions& opts, bool complex) {
  const Factor f = factorize(omega);
  const int m = opts.m > 0 ? opts.m : f.rank + 1;
  const Eigen::Index n = omega.dim();
  if (m < f.rank) throw DomainError("roof_upper_bound: m must be at least the rank of omega");
  if (m > n * n) throw DomainError("roof_upper_bound: m exceeds the Caratheodory bound N^2");

  std::optional<Candidate> best;
  auto consider = [&](Candidate c) {
    if (!best || c.value < best->value) best = std::move(c);
  };

  if (opts.warm_start) {
    if (opts.warm_start->r != f.rank || opts.warm_start->complex != complex || opts.warm_start->m > m)
      throw DomainError("roof_upper_bound: warm start does not match the search space");
    consider(local_search(f.w, opts.warm_start->grown(m)));
  }
  const int restarts = std::max(opts.restarts, opts.warm_start ? 0 : 1);
  for (int r = 0; r < restarts; ++r) {
    SplitMix64 rng(opts.seed, static_cast<std::uint64_t>(r));
    IsometryParam p = IsometryParam::zeros(m, f.rank, complex);
    for (auto& a : p.angles) a = pi * (2.0 * rng.uniform() - 1.0);
    consider(local_search(f.w, std::move(p)));
  }

  const ComplexMatrix rows = mixture_rows(isometry_from_param(best->param), f.w);
  return {best->value, decomposition_from_rows(rows), std::move(best->param)};
}

}  // namespace

int numerical_rank(const DensityMatrix& omega) { return factorize(omega).rank; }

Decomposition decomposition_from_isometry(const DensityMatrix& omega, const ComplexMatrix& u) {
  const Factor f = factorize(omega);
  if (u.cols() != f.rank) throw DomainError("decomposition_from_isometry: U must have rank(omega) columns");
  if ((u.adjoint() * u - ComplexMatrix::Identity(u.cols(), u.cols())).cwiseAbs().maxCoeff() > 1e-10)
    throw DomainError("decomposition_from_isometry: U is not column-orthonormal");
  return decomposition_from_rows(mixture_rows(u, f.w));
}

RoofEstimate roof_upper_bound(const DensityMatrix& omega, const RoofSearchOptions& opts) {
  return search(omega, opts, true);
}

RoofEstimate roof_upper_bound(const DensityMatrix& omega, int m, int restarts, std::uint64_t seed) {
  return roof_upper_bound(omega, RoofSearchOptions{m, restarts, seed, std::nullopt});
}

RoofEstimate real_roof_upper_bound(const DensityMatrix& omega, const RoofSearchOptions& opts) {
  if (!is_real(omega))
    throw DomainError("real_roof_upper_bound: omega must be real symmetric");
  return search(real_projection(omega), opts, false);
}

RoofEstimate real_roof_upper_bound(const DensityMatrix& omega, int m, int restarts, std::uint64_t seed) {
  return real_roof_upper_bound(omega, RoofSearchOptions{m, restarts, seed, std::nullopt});
}

bool is_real(const DensityMatrix& omega) { return omega.matrix().imag().cwiseAbs().maxCoeff() <= 1e-12; }

RoofEstimate auto_roof_upper_bound(const DensityMatrix& omega, const RoofSearchOptions& opts) {
  return is_real(omega) ? real_roof_upper_bound(omega, opts) : roof_upper_bound(omega, opts);
}

RoofEstimate roof_upper_bound_escalating(const DensityMatrix& omega, int restarts, std::uint64_t seed,
                                         std::optional<double> reference, double tolerance) {
  const int r = numerical_rank(omega);
  const int n = static_cast<int>(omega.dim());
  const int cap = std::min(std::max(r + 1, std::min(r * r, n * n)), n * n);
  const int first = std::min(r + 1, n * n);
  RoofEstimate est = auto_roof_upper_bound(omega, RoofSearchOptions{first, restarts, seed, std::nullopt});
  for (int m = first + 1; m <= cap; ++m) {
    if (!reference || est.value - *reference <= tolerance) break;
    RoofEstimate next = auto_roof_upper_bound(omega, RoofSearchOptions{m, restarts, seed, est.param});
    if (next.value <= est.value) est = std::move(next);
  }
  return est;
}

}  // namespace diagroof
