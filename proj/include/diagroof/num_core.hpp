#pragma once

#include <cmath>
#include <complex>
#include <concepts>

#include <Eigen/Dense>

#include "diagroof/errors.hpp"

namespace diagroof {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Values in [-kClampWindow, 0) are treated as rounding noise and mapped to 0.
inline constexpr double kClampWindow = 1e-12;

/// eta(x) = -x ln x with eta(0) = 0, in nats.
template <std::floating_point T>
T eta(T x) {
  if (x < T(0)) {
    if (x < -T(kClampWindow)) throw DomainError("eta: argument below 0");
    return T(0);
  }
  if (x > T(1) + T(kClampWindow)) throw DomainError("eta: argument above 1");
  if (x == T(0)) return T(0);
  return -x * std::log(x);
}

/// Probability vector: non-negative entries summing to one.
class ProbVector {
public:
  explicit ProbVector(Eigen::VectorXd entries);

  const Eigen::VectorXd& entries() const { return entries_; }
  Eigen::Index size() const { return entries_.size(); }
  double operator[](Eigen::Index i) const { return entries_[i]; }

private:
  Eigen::VectorXd entries_;
};

double shannon_entropy(const ProbVector& p);

/// Hermitian matrix checked on construction (|H - H^H| <= 1e-12 entrywise)
/// and stored exactly hermitian.
class ComplexHermitian {
public:
  explicit ComplexHermitian(const ComplexMatrix& m);

  const ComplexMatrix& matrix() const { return mat_; }
  Eigen::Index dim() const { return mat_.rows(); }

private:
  ComplexMatrix mat_;
};

struct HermitianEigen {
  Eigen::VectorXd values;  // ascending
  ComplexMatrix vectors;   // columns, matching values
};

/// Cyclic complex Jacobi sweeps. Stops when the off-diagonal Frobenius norm
/// falls below 1e-13 (scaled by max(1, |H|_F)) or after 50 sweeps.
HermitianEigen hermitian_eigen(const ComplexHermitian& h);

Eigen::VectorXd hermitian_eigenvalues(const ComplexHermitian& h);

}  // namespace diagroof
