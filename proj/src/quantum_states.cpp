#include "diagroof/quantum_states.hpp"

#include <numbers>
#include <string>

namespace diagroof {

namespace {

void check_density(const ComplexHermitian& h) {
  const double tr = h.matrix().trace().real();
  if (std::abs(tr - 1.0) > 1e-10) throw DomainError("DensityMatrix: trace " + std::to_string(tr) + " is not 1");
  const double lmin = hermitian_eigenvalues(h)[0];
  if (lmin < -1e-10) throw DomainError("DensityMatrix: not positive semidefinite (eigenvalue " + std::to_string(lmin) + ")");
}

}  // namespace

DensityMatrix::DensityMatrix(const ComplexMatrix& m) : mat_(m) { check_density(mat_); }

PureState::PureState(ComplexVector amps) : amps_(std::move(amps)) {
  if (amps_.size() == 0) throw DomainError("PureState: empty amplitude vector");
  if (std::abs(amps_.squaredNorm() - 1.0) > 1e-12) throw DomainError("PureState: amplitudes are not normalized");
}

PureState PureState::normalized(const ComplexVector& v) {
  const double n = v.norm();
  if (!(n > 0.0) || !std::isfinite(n)) throw DomainError("PureState: cannot normalize a zero vector");
  return PureState(v / n);
}

DensityMatrix pure_to_density(const PureState& psi) {
  return DensityMatrix::from_trusted(psi.amps() * psi.amps().adjoint());
}

DensityMatrix diagonal_channel(const DensityMatrix& omega) {
  ComplexMatrix d = ComplexMatrix::Zero(omega.dim(), omega.dim());
  d.diagonal() = omega.matrix().diagonal();
  return DensityMatrix::from_trusted(d);
}

double output_entropy_D(const DensityMatrix& omega) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < omega.dim(); ++i) s += eta(omega.matrix()(i, i).real());
  return s;
}

double output_entropy_D(const PureState& psi) {
  double s = 0.0;
  for (const auto& a : psi.amps()) s += eta(std::norm(a));
  return s;
}

double von_neumann_entropy(const DensityMatrix& omega) {
  double s = 0.0;
  for (double lambda : hermitian_eigenvalues(omega.hermitian())) s += eta(std::min(lambda, 1.0));
  return s;
}

DensityMatrix real_projection(const DensityMatrix& omega) {
  const ComplexMatrix& m = omega.matrix();
  // (omega + omega^T)/2 of a hermitian matrix is its real part.
  const ComplexMatrix p = m.real().cast<std::complex<double>>();
  return DensityMatrix(p);
}

DensityMatrix random_density_matrix(Eigen::Index n, SplitMix64& rng, Eigen::Index rank, bool real) {
  if (rank <= 0) rank = n;
  auto gauss = [&rng] {
    const double u1 = 1.0 - rng.uniform();
    const double u2 = rng.uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  };
  ComplexMatrix g(n, rank);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < rank; ++j) g(i, j) = {gauss(), real ? 0.0 : gauss()};
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix(0.5 * (rho + rho.adjoint()));
}

const std::array<Eigen::Matrix3d, 6>& s3_permutations() {
  static const std::array<Eigen::Matrix3d, 6> perms = [] {
    std::array<Eigen::Matrix3d, 6> out;
    const int images[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (int k = 0; k < 6; ++k) {
      out[k].setZero();
      for (int i = 0; i < 3; ++i) out[k](images[k][i], i) = 1.0;
    }
    return out;
  }();
  return perms;
}

SymmetricStateZ twirl_s3(const DensityMatrix& omega) {
  if (omega.dim() != 3) throw DomainError("twirl_s3: state must be 3x3");
  ComplexMatrix avg = ComplexMatrix::Zero(3, 3);
  for (const auto& p : s3_permutations()) {
    const ComplexMatrix pc = p.cast<std::complex<double>>();
    avg += pc * omega.matrix() * pc.transpose();
  }
  avg /= 6.0;
  const Eigen::Matrix3d real_part = avg.real();
  // every off-diagonal entry of the twirled real part equals z/3
  const double off = (real_part.sum() - real_part.trace()) / 6.0;
  return {3.0 * off};
}

DensityMatrix omega_of_z(double z) {
  if (!(z >= -0.5 && z <= 1.0)) throw DomainError("omega_of_z: z must lie in [-1/2, 1]");
  ComplexMatrix m = ComplexMatrix::Constant(3, 3, z / 3.0);
  m.diagonal().setConstant(1.0 / 3.0);
  return DensityMatrix::from_trusted(m);
}

double fidelity_param(double z) { return (2.0 * z + 1.0) / 3.0; }

}  // namespace diagroof
