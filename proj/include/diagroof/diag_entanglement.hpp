#pragma once

#include <complex>
#include <string_view>
#include <vector>

#include "diagroof/quantum_states.hpp"

namespace diagroof {

/// Real amplitudes (a, b, c) on the constraint circle a^2+b^2+c^2 = 1,
/// ab+bc+ca = z, located by the angle theta.
struct ThetaPoint {
  double z;
  double theta;
  double a, b, c;
};

/// Weighted pure states whose mixture reproduces a target state.
struct Decomposition {
  ProbVector weights;
  std::vector<PureState> states;

  ComplexMatrix mixture() const;
  /// sum_j p_j S(Phi_D(pi_j))
  double average_output_entropy() const;
};

enum class EdRegion { lower_linear, roof_equals_epsilon, upper_linear };

std::string_view to_string(EdRegion r);

struct EpsilonValue {
  double value;
  double theta_min;  // in [0, pi/6]
};

struct EDCurveRecord {
  double z;
  double epsilon;
  double theta_min;
  double ed;
  EdRegion region;
};

/// z at which the upper linear piece of E_D begins.
inline constexpr double kUpperJunction = 5.0 / 6.0;

ThetaPoint abc_from_theta(double z, double theta);

/// Minimum output entropy over real pure states twirling to omega(z).
/// Coarse scan of 256 angles on [0, pi/3], then golden-section refinement.
EpsilonValue epsilon_of_z(double z);

/// Largest z where the minimizing angle leaves 0 (about -0.4150).
double theta_transition();

/// Output entropy of the theta = 0 state (a, b, b).
double script_S(double z);

/// Tangency point of the line from (-1/2, ln 2) to script_S; cached.
double compute_zstar();

EdRegion region_of_z(double z);

/// The entanglement entropy E_D(z) of omega(z): lower convex envelope of
/// epsilon, two linear pieces around the script_S arc.
double ed_of_z(double z);

EDCurveRecord ed_record(double z);

/// Optimal decomposition of omega(z) into one or two cyclic orbits of real
/// pure states (plus the uniform superposition above 5/6).
Decomposition optimal_decomposition(double z);

/// Cyclic shifts (a,b,c), (c,a,b), (b,c,a).
std::array<PureState, 3> cyclic_orbit(double a, double b, double c);

/// E_D of the rank-2 states supported on span{e0, (0, a, b)}:
///   [[1-z, x a, x b], [x* a*, z|a|^2, z a* b], [x* b*, z a b*, z |b|^2]]
double rank2_ed(double z, std::complex<double> x, std::complex<double> a, std::complex<double> b);

/// The matrix above, validated as a DensityMatrix.
DensityMatrix rank2_state(double z, std::complex<double> x, std::complex<double> a, std::complex<double> b);

}  // namespace diagroof
