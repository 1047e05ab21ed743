#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

namespace diagroof {

/// Real unit vector with zero component sum: a pure state on the face
/// orthogonal to the uniform superposition.
class FaceVector {
public:
  explicit FaceVector(Eigen::VectorXd amps);

  const Eigen::VectorXd& amps() const { return amps_; }
  Eigen::Index dim() const { return amps_.size(); }

private:
  Eigen::VectorXd amps_;
};

double face_output_entropy(const FaceVector& v);

/// Solutions x of lambda + mu x = x ln x^2. x2 and x3 exist iff
/// zeta = |lambda|/2 e^{-mu/2} <= 1/e; at zeta = 1/e they coincide.
struct StationaryRoots {
  double lambda;
  double mu;
  double zeta;
  double x1;
  std::optional<double> x2;
  std::optional<double> x3;

  std::vector<double> roots() const;
};

/// Minimal diagonal-map output entropy on the face: ln 2 up to N = 6, the
/// one-vs-rest value beyond.
double s_min_face(int n);

/// ln N - (1 - 2/N) ln(N - 1), computed without cancellation.
double one_vs_rest_entropy(int n);

std::vector<FaceVector> minimizer_states(int n);

/// Entropy of the two-valued stationary vector with n entries of one sign.
double s_of_Nn(int big_n, int n);

StationaryRoots lagrange_roots(double lambda, double mu);

/// e^{2 W0(zeta)} + e^{2 W0(-zeta)} + e^{2 W-1(-zeta)}, 0 < zeta <= 1/e.
double g_function(double zeta);

struct FaceSearchResult {
  double value;
  FaceVector argmin;
};

/// Random restarts + pairwise-rotation descent on the unit sphere of the
/// zero-sum hyperplane. Deterministic in (n, restarts, seed).
FaceSearchResult brute_force_min_face(int n, int restarts, std::uint64_t seed);

}  // namespace diagroof
