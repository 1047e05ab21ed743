#pragma once

#include <cstdint>
#include <optional>

#include "diagroof/diag_entanglement.hpp"

namespace diagroof {

/// Angles of a product of Givens rotations applied to the first r columns of
/// the m x m identity. Layout: for i < r, i < j < m (row-major), one angle per
/// pair (real) or an angle and a phase (complex); complex parameters end with
/// r column phases.
struct IsometryParam {
  int m = 0;
  int r = 0;
  bool complex = false;
  Eigen::VectorXd angles;

  static int pair_count(int m, int r) { return m * r - r * (r + 1) / 2; }
  static int angle_count(int m, int r, bool complex) { return complex ? 2 * pair_count(m, r) + r : pair_count(m, r); }

  static IsometryParam zeros(int m, int r, bool complex);
  /// Same isometry padded with a zero row: every new angle is 0.
  IsometryParam grown(int new_m) const;
};

/// m x r matrix with orthonormal columns.
ComplexMatrix isometry_from_param(const IsometryParam& p);

/// Mixture realization of omega through a column-orthonormal U (m x r, r =
/// number of eigenvalues above 1e-10): v_j = E Lambda^{1/2} (row j of U)^H,
/// weights |v_j|^2. Rows with weight below 1e-12 are dropped.
Decomposition decomposition_from_isometry(const DensityMatrix& omega, const ComplexMatrix& u);

int numerical_rank(const DensityMatrix& omega);

struct RoofEstimate {
  double value;
  Decomposition best;
  IsometryParam param;
};

struct RoofSearchOptions {
  int m = 0;
  int restarts = 20;
  std::uint64_t seed = 0;
  /// Evaluated as an additional start before the random ones.
  std::optional<IsometryParam> warm_start;
};

/// Upper bound on E_D(omega) by random restarts of cyclic coordinate descent
/// over the isometry angles. Any decomposition found is a valid bound.
RoofEstimate roof_upper_bound(const DensityMatrix& omega, const RoofSearchOptions& opts);
RoofEstimate roof_upper_bound(const DensityMatrix& omega, int m, int restarts, std::uint64_t seed);

/// Same search restricted to real isometries; omega must be real symmetric.
RoofEstimate real_roof_upper_bound(const DensityMatrix& omega, const RoofSearchOptions& opts);
RoofEstimate real_roof_upper_bound(const DensityMatrix& omega, int m, int restarts, std::uint64_t seed);

bool is_real(const DensityMatrix& omega);

/// Real search for real symmetric omega, complex search otherwise.
RoofEstimate auto_roof_upper_bound(const DensityMatrix& omega, const RoofSearchOptions& opts);

/// Starts at m = r + 1 and grows m (warm-started) up to max(r + 1, min(r^2, N^2))
/// until the bound is within `tolerance` of `reference`.
RoofEstimate roof_upper_bound_escalating(const DensityMatrix& omega, int restarts, std::uint64_t seed,
                                         std::optional<double> reference, double tolerance = 1e-6);

}  // namespace diagroof
