#include <cmath>

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include "gendirac/nonrel.hpp"
#include "gendirac/random.hpp"

namespace gendirac {
namespace {

NonRelParams unit_mass() { return NonRelParams{}; }

TEST(Pauli, Examples) {
  EXPECT_EQ(pauli_energy(Momentum::Zero(), unit_mass()), 0.0);
  EXPECT_DOUBLE_EQ(pauli_energy({0.0, 0.0, 0.1}, unit_mass()), 0.005);
  NonRelParams p;
  p.c_tilde = {0.0, 0.0, 0.2};
  p.eps_tilde = 0.1;
  EXPECT_NEAR(pauli_energy(Momentum::Zero(), p), -0.08, 1e-16);
}

TEST(Pauli, ScalarPotentialShiftsEnergy) {
  NonRelParams p;
  p.a0 = 0.3;
  p.e_charge = -2.0;
  EXPECT_NEAR(pauli_energy({0.0, 0.2, 0.0}, p), 0.02 - 0.6, 1e-15);
}

TEST(Pauli, RejectsUnsupportedInputs) {
  NonRelParams p;
  p.vector_potential = {0.0, 0.1, 0.0};
  EXPECT_THROW(pauli_energy(Momentum::Zero(), p), std::invalid_argument);
  NonRelParams massless;
  massless.m0 = 0.0;
  EXPECT_THROW(pauli_energy(Momentum::Zero(), massless), std::invalid_argument);
  NonRelParams no_light;
  no_light.c_light = -1.0;
  EXPECT_THROW(dirac_energy(Momentum::Zero(), no_light, Branch::positive), std::invalid_argument);
}

TEST(LevyLeblond, AtRest) {
  NonRelParams p;
  p.eps_tilde = 0.4;
  const auto s = levy_leblond_solve(Momentum::Zero(), p);
  EXPECT_EQ(s.energy, -0.4);
  EXPECT_EQ(s.chi.norm(), 0.0);
  EXPECT_DOUBLE_EQ(s.phi.norm(), 1.0);
}

// Finite eigenvalues of the pencil (A, B) with A (phi, chi) = eps B (phi, chi):
//   eps phi = -eps~ phi + c sigma.P chi,   0 = sigma.P phi - 2 m0 c chi.
// Real arithmetic suffices for P in the x-z plane.
std::vector<double> pencil_energies(const Momentum& k, const NonRelParams& p) {
  const Momentum m = k + p.c_tilde;
  Eigen::Matrix2d sp;
  sp << m.z(), m.x(), m.x(), -m.z();
  Eigen::Matrix4d a = Eigen::Matrix4d::Zero();
  Eigen::Matrix4d b = Eigen::Matrix4d::Zero();
  a.topLeftCorner<2, 2>() = -p.eps_tilde * Eigen::Matrix2d::Identity();
  a.topRightCorner<2, 2>() = p.c_light * sp;
  a.bottomLeftCorner<2, 2>() = sp;
  a.bottomRightCorner<2, 2>() = -2.0 * p.m0 * p.c_light * Eigen::Matrix2d::Identity();
  b.topLeftCorner<2, 2>() = Eigen::Matrix2d::Identity();
  Eigen::GeneralizedEigenSolver<Eigen::Matrix4d> solver(a, b);
  std::vector<double> out;
  for (int i = 0; i < 4; ++i) {
    if (std::abs(solver.betas()(i)) > 1e-12) {
      out.push_back((solver.alphas()(i) / solver.betas()(i)).real());
    }
  }
  return out;
}

TEST(LevyLeblond, MatchesLinearSystemOracle) {
  const Momentum k{0.0, 0.0, 0.2};
  const auto oracle = pencil_energies(k, unit_mass());
  ASSERT_EQ(oracle.size(), 2U);
  for (double e : oracle) EXPECT_NEAR(e, 0.02, 1e-14);
  const auto s = levy_leblond_solve(k, unit_mass());
  EXPECT_NEAR(s.energy, 0.02, 1e-16);
  EXPECT_LE(levy_leblond_residual(k, unit_mass(), s), 1e-15);

  Rng rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    NonRelParams p;
    p.m0 = rng.uniform(0.2, 3.0);
    p.eps_tilde = rng.uniform(-1, 1);
    p.c_tilde = {rng.uniform(-1, 1), 0.0, rng.uniform(-1, 1)};
    p.c_light = rng.uniform(0.5, 3.0);
    const Momentum kk{rng.uniform(-1, 1), 0.0, rng.uniform(-1, 1)};
    const double e = levy_leblond_solve(kk, p).energy;
    for (double o : pencil_energies(kk, p)) EXPECT_NEAR(o, e, 1e-12);
  }
}

TEST(LevyLeblond, AgreesWithPauliEverywhere) {
  Rng rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    NonRelParams p;
    p.m0 = rng.uniform(0.1, 5.0);
    p.eps_tilde = rng.uniform(-1, 1);
    p.c_tilde = {rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
    p.c_light = rng.uniform(0.5, 10.0);
    const Momentum k{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
    const TwoSpinor phi0(Complex(rng.uniform(-1, 1), rng.uniform(-1, 1)), rng.uniform(-1, 1));
    const auto s = levy_leblond_solve(k, p, phi0);
    EXPECT_NEAR(s.energy, pauli_energy(k, p), 1e-13);
    EXPECT_LE(levy_leblond_residual(k, p, s), 1e-12);
    EXPECT_NEAR(s.phi.squaredNorm() + s.chi.squaredNorm(), 1.0, 1e-14);
  }
}

TEST(LevyLeblond, ZeroDirectionRejected) {
  EXPECT_THROW(levy_leblond_solve(Momentum::Zero(), unit_mass(), TwoSpinor::Zero()),
               std::invalid_argument);
}

TEST(Limit, RelativeErrorAtSmallMomentum) {
  const auto e = nonrel_error({0.0, 0.0, 0.1}, unit_mass());
  EXPECT_FALSE(e.absolute);
  // sqrt(1 + k^2) - 1 against k^2 / 2.
  EXPECT_NEAR(e.value, 0.0024875775822099863, 1e-12);
  EXPECT_LT(nonrel_error({1e-6, 0.0, 0.0}, unit_mass()).value, 1e-12);
}

TEST(Limit, QuadraticRelativeErrorScaling) {
  for (double k : {1e-3, 5e-3, 1e-2}) {
    const double ratio = nonrel_error({0.0, 0.0, 2 * k}, unit_mass()).value /
                         nonrel_error({0.0, 0.0, k}, unit_mass()).value;
    EXPECT_NEAR(ratio, 4.0, 1e-3);
  }
}

TEST(Limit, QuarticAbsoluteErrorSlope) {
  for (double m0 : {0.5, 1.0, 3.0}) {
    NonRelParams p;
    p.m0 = m0;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const int n = 25;
    for (int i = 0; i < n; ++i) {
      const double k = m0 * std::pow(10.0, -3.0 + 2.0 * i / (n - 1));
      const double x = std::log(k);
      const double y = std::log(std::abs(limit_difference({k, 0.0, 0.0}, p)));
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    EXPECT_NEAR((n * sxy - sx * sy) / (n * sxx - sx * sx), 4.0, 0.1) << m0;
  }
}

TEST(Limit, LeadingCoefficient) {
  NonRelParams p;
  p.m0 = 2.0;
  p.c_light = 3.0;
  const double k = 1e-3;
  const double expected = -std::pow(k, 4) / (8 * std::pow(2.0, 3) * 9.0);
  EXPECT_NEAR(limit_difference({0.0, k, 0.0}, p) / expected, 1.0, 1e-6);
}

TEST(Limit, SmallMomentumRegimeStaysWithinOnePercent) {
  Rng rng(14);
  for (int trial = 0; trial < 200; ++trial) {
    NonRelParams p;
    p.m0 = rng.uniform(0.1, 5.0);
    p.c_light = rng.uniform(0.5, 5.0);
    p.c_tilde = {rng.uniform(-0.03, 0.03), 0.0, 0.0};
    const double reach = 0.1 * p.m0 * p.c_light;
    Momentum k{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
    k = k.normalized() * rng.uniform(0.0, reach) - p.c_tilde;
    EXPECT_LE(nonrel_error(k, p).value, 0.01) << trial;
  }
}

TEST(Limit, ZeroPauliEnergyReportsAbsoluteError) {
  NonRelParams p;
  p.c_tilde = {0.0, 0.0, 0.3};
  const auto e = nonrel_error({0.0, 0.0, -0.3}, p);
  EXPECT_TRUE(e.absolute);
  EXPECT_EQ(e.value, 0.0);
}

TEST(Limit, RejectsRelativisticMomentum) {
  EXPECT_THROW(nonrel_error({0.0, 0.0, 1.0}, unit_mass()), std::domain_error);
  NonRelParams p;
  p.c_light = 10.0;
  EXPECT_NO_THROW(nonrel_error({0.0, 0.0, 5.0}, p));
}

TEST(Dirac, PhysicalUnitsReduceToNatural) {
  Rng rng(15);
  for (int trial = 0; trial < 50; ++trial) {
    NonRelParams p;
    p.m0 = rng.uniform(0.1, 5.0);
    p.eps_tilde = rng.uniform(-1, 1);
    p.c_tilde = {rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
    const Momentum k{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)};
    const auto g = GeneralizedParams::from_physical(p.m0, p.eps_tilde,
                                                    {p.c_tilde.x(), p.c_tilde.y(), p.c_tilde.z()});
    EXPECT_NEAR(dirac_energy(k, p, Branch::positive), dispersion(k, g, Branch::positive), 1e-13);
    EXPECT_NEAR(dirac_energy(k, p, Branch::negative), dispersion(k, g, Branch::negative), 1e-13);
    EXPECT_NEAR(dirac_kinetic_energy(k, p), dirac_energy(k, p, Branch::positive) - p.m0, 1e-12);
  }
}

TEST(Dirac, LargeLightSpeedApproachesPauli) {
  NonRelParams p;
  p.m0 = 1.5;
  p.c_light = 1e4;
  p.eps_tilde = 0.2;
  const Momentum k{0.3, 0.4, 0.0};
  EXPECT_NEAR(dirac_kinetic_energy(k, p), pauli_energy(k, p), 1e-9);
}

TEST(Standard, GeneralizedFormsReduceExactly) {
  Rng rng(16);
  for (int trial = 0; trial < 100; ++trial) {
    NonRelParams p;
    p.m0 = rng.uniform(0.1, 5.0);
    const Momentum k{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
    const double standard = k.squaredNorm() / (2.0 * p.m0);
    EXPECT_EQ(pauli_energy(k, p), standard);
    EXPECT_EQ(levy_leblond_solve(k, p).energy, standard);
  }
}

}  // namespace
}  // namespace gendirac
