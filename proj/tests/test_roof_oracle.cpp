#include <doctest.h>

#include <cmath>
#include <numbers>

#include "diagroof/roof_oracle.hpp"

using namespace diagroof;
using cd = std::complex<double>;
using std::numbers::ln2;

namespace {

ComplexMatrix diag3(double a, double b, double c) {
  ComplexMatrix m = ComplexMatrix::Zero(3, 3);
  m.diagonal() << a, b, c;
  return m;
}

}  // namespace

TEST_CASE("isometries are column-orthonormal") {
  SplitMix64 rng(51);
  for (bool complex : {false, true}) {
    for (int m = 1; m <= 6; ++m) {
      for (int r = 1; r <= m; ++r) {
        IsometryParam p = IsometryParam::zeros(m, r, complex);
        CHECK(p.angles.size() == IsometryParam::angle_count(m, r, complex));
        CHECK(isometry_from_param(p).isApprox(ComplexMatrix::Identity(m, r)));
        for (auto& a : p.angles) a = 2 * std::numbers::pi * (rng.uniform() - 0.5);
        const ComplexMatrix u = isometry_from_param(p);
        CHECK((u.adjoint() * u - ComplexMatrix::Identity(r, r)).cwiseAbs().maxCoeff() < 1e-12);
        if (!complex) CHECK(u.imag().cwiseAbs().maxCoeff() == 0.0);

        // Growing pads a zero row and keeps the isometry.
        const ComplexMatrix g = isometry_from_param(p.grown(m + 2));
        CHECK((g.topRows(m) - u).cwiseAbs().maxCoeff() < 1e-14);
        CHECK(g.bottomRows(2).cwiseAbs().maxCoeff() < 1e-14);
      }
    }
  }
}

TEST_CASE("decomposition from isometry") {
  SUBCASE("identity gives the spectral decomposition") {
    SplitMix64 rng(52);
    const DensityMatrix w = random_density_matrix(4, rng);
    const Decomposition d = decomposition_from_isometry(w, ComplexMatrix::Identity(4, 4));
    const HermitianEigen e = hermitian_eigen(w.hermitian());
    REQUIRE(d.states.size() == 4);
    for (std::size_t j = 0; j < 4; ++j) {
      CHECK(d.weights[static_cast<Eigen::Index>(j)] == doctest::Approx(e.values[static_cast<Eigen::Index>(j)]));
      CHECK(std::abs(e.vectors.col(static_cast<Eigen::Index>(j)).dot(d.states[j].amps())) == doctest::Approx(1.0));
    }
    CHECK((d.mixture() - w.matrix()).cwiseAbs().maxCoeff() < 1e-9);
  }

  SUBCASE("omega(0) splits into the computational basis") {
    const Decomposition d = decomposition_from_isometry(omega_of_z(0.0), ComplexMatrix::Identity(3, 3));
    CHECK(d.average_output_entropy() < 1e-12);
    for (Eigen::Index j = 0; j < 3; ++j) CHECK(d.weights[j] == doctest::Approx(1.0 / 3));
  }

  SUBCASE("pure states have a unique decomposition") {
    const PureState psi = PureState::normalized(Eigen::Vector3cd(cd(1, 1), cd(0.3, 0), cd(0, -2)));
    IsometryParam p = IsometryParam::zeros(4, 1, true);
    SplitMix64 rng(53);
    for (auto& a : p.angles) a = rng.uniform() * 6;
    const Decomposition d = decomposition_from_isometry(pure_to_density(psi), isometry_from_param(p));
    for (const auto& s : d.states) CHECK(std::abs(psi.amps().dot(s.amps())) == doctest::Approx(1.0).epsilon(1e-10));
  }

  SUBCASE("random isometries reproduce omega") {
    SplitMix64 rng(54);
    for (int k = 0; k < 20; ++k) {
      const DensityMatrix w = random_density_matrix(3, rng, 2);
      REQUIRE(numerical_rank(w) == 2);
      IsometryParam p = IsometryParam::zeros(5, 2, true);
      for (auto& a : p.angles) a = rng.uniform() * 6;
      const Decomposition d = decomposition_from_isometry(w, isometry_from_param(p));
      CHECK((d.mixture() - w.matrix()).cwiseAbs().maxCoeff() < 1e-9);
    }
  }

  CHECK_THROWS_AS(decomposition_from_isometry(omega_of_z(0.0), ComplexMatrix::Identity(3, 2)), DomainError);
}

TEST_CASE("roof bound examples") {
  const PureState psi = PureState::normalized(Eigen::Vector3cd(cd(1, 0), cd(0, 1), cd(0.5, 0)));
  const RoofEstimate pure = roof_upper_bound(pure_to_density(psi), 2, 3, 1);
  CHECK(pure.value == doctest::Approx(output_entropy_D(psi)).epsilon(1e-12));

  CHECK(std::abs(roof_upper_bound(omega_of_z(-0.5), 3, 20, 1).value - ln2) < 1e-6);
  CHECK(std::abs(roof_upper_bound(omega_of_z(0.5), 3, 20, 1).value - script_S(0.5)) < 1e-5);
  CHECK(std::abs(real_roof_upper_bound(omega_of_z(0.0), 4, 20, 1).value) < 1e-9);
}

TEST_CASE("roof bounds are sound and reproducible") {
  for (double z : {-0.48, -0.3, 0.2, 0.7, 0.95}) {
    for (std::uint64_t seed : {1u, 2u}) {
      const RoofEstimate est = real_roof_upper_bound(omega_of_z(z), 4, 4, seed);
      CHECK(est.value >= ed_of_z(z) - 1e-9);
      CHECK((est.best.mixture() - omega_of_z(z).matrix()).cwiseAbs().maxCoeff() < 1e-9);
      CHECK(est.best.average_output_entropy() == doctest::Approx(est.value).epsilon(1e-12));
      for (const auto& s : est.best.states) CHECK(s.amps().imag().cwiseAbs().maxCoeff() == 0.0);
      CHECK(real_roof_upper_bound(omega_of_z(z), 4, 4, seed).value == est.value);
    }
  }
}

TEST_CASE("larger decompositions never do worse with nested warm starts") {
  SplitMix64 rng(55);
  const DensityMatrix w = random_density_matrix(3, rng);
  RoofEstimate prev = roof_upper_bound(w, 3, 2, 7);
  for (int m = 4; m <= 6; ++m) {
    const RoofEstimate next = roof_upper_bound(w, RoofSearchOptions{m, 2, 7, prev.param.grown(m)});
    CHECK(next.value <= prev.value + 1e-12);
    prev = next;
  }
}

TEST_CASE("lowest leaf is flat") {
  SplitMix64 rng(56);
  for (int k = 0; k < 20; ++k) {
    double a = rng.uniform(), b = rng.uniform(), c = rng.uniform();
    const double s = a + b + c;
    const DensityMatrix w(diag3(a / s, b / s, c / s));
    const int r = numerical_rank(w);
    const RoofEstimate est = real_roof_upper_bound(w, RoofSearchOptions{r, 1, 1, IsometryParam::zeros(r, r, false)});
    CHECK(std::abs(est.value) < 1e-9);
  }
}

TEST_CASE("argument checks") {
  ComplexMatrix m = ComplexMatrix::Identity(2, 2) / 2.0;
  m(0, 1) = cd(0, 0.1);
  m(1, 0) = cd(0, -0.1);
  const DensityMatrix complex_state(m);
  CHECK_FALSE(is_real(complex_state));
  CHECK(is_real(omega_of_z(0.3)));
  CHECK_THROWS_AS(real_roof_upper_bound(complex_state, 2, 1, 1), DomainError);
  CHECK_THROWS_AS(roof_upper_bound(omega_of_z(0.3), 2, 1, 1), DomainError);   // m < rank
  CHECK_THROWS_AS(roof_upper_bound(omega_of_z(0.3), 10, 1, 1), DomainError);  // m > N^2
}

TEST_CASE("escalation stops once the reference is met") {
  const RoofEstimate est = roof_upper_bound_escalating(omega_of_z(0.5), 10, 1, ed_of_z(0.5));
  CHECK(std::abs(est.value - ed_of_z(0.5)) < 1e-6);
}
