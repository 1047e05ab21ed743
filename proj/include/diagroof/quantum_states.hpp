#pragma once

#include <array>

#include "diagroof/num_core.hpp"
#include "diagroof/rng.hpp"

namespace diagroof {

/// Unit-trace positive semidefinite hermitian matrix.
/// Validation: hermitian within 1e-12, trace 1 within 1e-10, smallest
/// eigenvalue >= -1e-10.
class DensityMatrix {
public:
  explicit DensityMatrix(const ComplexMatrix& m);

  const ComplexMatrix& matrix() const { return mat_.matrix(); }
  const ComplexHermitian& hermitian() const { return mat_; }
  Eigen::Index dim() const { return mat_.dim(); }

  /// Skips the trace and spectrum checks; for matrices valid by construction.
  static DensityMatrix from_trusted(const ComplexMatrix& m) { return DensityMatrix(ComplexHermitian(m)); }

private:
  explicit DensityMatrix(ComplexHermitian h) : mat_(std::move(h)) {}

  ComplexHermitian mat_;
};

/// Normalized amplitude vector (sum |a_i|^2 = 1 within 1e-12).
class PureState {
public:
  explicit PureState(ComplexVector amps);

  /// Rescales a non-zero vector to unit norm.
  static PureState normalized(const ComplexVector& v);
  static PureState from_real(const Eigen::VectorXd& v) { return normalized(ComplexVector(v.cast<std::complex<double>>())); }

  const ComplexVector& amps() const { return amps_; }
  Eigen::Index dim() const { return amps_.size(); }

private:
  ComplexVector amps_;
};

/// Parameter of the permutation-symmetric real family omega(z), -1/2 <= z <= 1.
struct SymmetricStateZ {
  double z;
};

DensityMatrix pure_to_density(const PureState& psi);
DensityMatrix diagonal_channel(const DensityMatrix& omega);

double output_entropy_D(const DensityMatrix& omega);
double output_entropy_D(const PureState& psi);
double von_neumann_entropy(const DensityMatrix& omega);

/// (omega + omega^T) / 2
DensityMatrix real_projection(const DensityMatrix& omega);

/// Average over the six basis permutations followed by the real projection;
/// the result is omega(z) and only z is returned.
SymmetricStateZ twirl_s3(const DensityMatrix& omega);

DensityMatrix omega_of_z(double z);

/// Fidelity of omega(z) with the uniform superposition, (2z + 1) / 3.
double fidelity_param(double z);

/// Ginibre-distributed random state G G^H / tr(G G^H) with G of size n x rank.
DensityMatrix random_density_matrix(Eigen::Index n, SplitMix64& rng, Eigen::Index rank = 0, bool real = false);

/// The six permutation matrices of three basis states.
const std::array<Eigen::Matrix3d, 6>& s3_permutations();

}  // namespace diagroof
