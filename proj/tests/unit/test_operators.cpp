#include <cmath>

#include <gtest/gtest.h>

#include "gendirac/operators.hpp"
#include "oracles.hpp"

namespace gendirac {
namespace {

GeneralizedParams random_params(Rng& rng) {
  return GeneralizedParams::from_physical(
      rng.uniform(0.1, 5.0), rng.uniform(-1, 1),
      {rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)});
}

Momentum random_k(Rng& rng) { return {rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3)}; }

const GeneralizedParams kShifted = GeneralizedParams::from_physical(1.0, 0.5, {0.0, 0.0, 0.25});

TEST(Hamiltonian, RestFrameIsBeta) {
  const ComplexMatrix4 h = hamiltonian_matrix(Momentum::Zero(), GeneralizedParams::standard(1.0));
  ComplexMatrix4 expected = ComplexMatrix4::Zero();
  expected.diagonal() << 1.0, 1.0, -1.0, -1.0;
  EXPECT_EQ(h, expected);
}

TEST(Hamiltonian, EigenvaluesFromGeneralSolver) {
  const auto ev = testing::general_eigenvalues(
      hamiltonian_matrix({0.0, 0.0, 0.5}, GeneralizedParams::standard(1.0)));
  const double root = 1.118033988749895;  // sqrt(1.25)
  EXPECT_NEAR(ev[0], -root, 1e-12);
  EXPECT_NEAR(ev[1], -root, 1e-12);
  EXPECT_NEAR(ev[2], root, 1e-12);
  EXPECT_NEAR(ev[3], root, 1e-12);

  const auto shifted = testing::general_eigenvalues(hamiltonian_matrix(Momentum::Zero(), kShifted));
  EXPECT_NEAR(shifted[0], -1.5307764064044151, 1e-12);
  EXPECT_NEAR(shifted[3], 0.5307764064044151, 1e-12);
}

TEST(Hamiltonian, AlphaBetaAlgebra) {
  for (int j = 1; j <= 3; ++j) {
    EXPECT_TRUE(is_hermitian(alpha(j), 0.0));
    EXPECT_LE(max_abs(anticommutator(alpha(j), beta())), 0.0);
    EXPECT_LE(max_abs(alpha(j) - Complex(0.0, 1.0) * gamma_lower(0) * gamma_lower(j)), 1e-16);
    for (int l = 1; l <= 3; ++l) {
      const ComplexMatrix4 expected = (j == l ? 2.0 : 0.0) * ComplexMatrix4::Identity();
      EXPECT_LE(max_abs(anticommutator(alpha(j), alpha(l)) - expected), 0.0);
    }
  }
}

TEST(Hamiltonian, HermitianForRandomInputs) {
  Rng rng(1);
  for (int trial = 0; trial < 500; ++trial) {
    const ComplexMatrix4 h = hamiltonian_matrix(random_k(rng), random_params(rng));
    EXPECT_LE(max_abs(h - h.adjoint()), 1e-13);
  }
}

TEST(Dispersion, Examples) {
  EXPECT_DOUBLE_EQ(dispersion(Momentum::Zero(), GeneralizedParams::standard(1.0), Branch::positive), 1.0);
  EXPECT_NEAR(dispersion(Momentum::Zero(), kShifted, Branch::positive), 0.5307764064044151, 1e-15);
}

TEST(Dispersion, BranchesSumToMinusTwiceShift) {
  Rng rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = random_params(rng);
    const Momentum k = random_k(rng);
    EXPECT_NEAR(dispersion(k, p, Branch::positive) + dispersion(k, p, Branch::negative),
                -2.0 * p.eps_tilde(), 1e-13);
  }
}

TEST(Dispersion, MatchesDiagonalization) {
  Rng rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    const auto p = random_params(rng);
    const Momentum k = random_k(rng);
    const auto ev = testing::general_eigenvalues(hamiltonian_matrix(k, p));
    const double plus = dispersion(k, p, Branch::positive);
    const double minus = dispersion(k, p, Branch::negative);
    EXPECT_NEAR(ev[0], minus, 1e-10);
    EXPECT_NEAR(ev[1], minus, 1e-10);
    EXPECT_NEAR(ev[2], plus, 1e-10);
    EXPECT_NEAR(ev[3], plus, 1e-10);
  }
}

TEST(Dispersion, DeterminantIsSquaredShellCondition) {
  Rng rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = random_params(rng);
    const Momentum k = random_k(rng);
    const double eps = rng.uniform(-6, 6);
    const ComplexMatrix4 shifted = hamiltonian_matrix(k, p) - eps * ComplexMatrix4::Identity();
    const Momentum kin = k + p_tilde_vector(p);
    const double shell =
        std::pow(eps + p.eps_tilde(), 2) - p.m0() * p.m0() - kin.squaredNorm();
    const double expected = shell * shell;
    const Complex det = testing::determinant(shifted);
    EXPECT_LE(std::abs(det - expected), 1e-8 * std::max(1.0, expected)) << trial;
  }
}

TEST(PlaneWave, RestFrameSpinorsAreCanonical) {
  const auto s = plane_wave_solve(Momentum::Zero(), GeneralizedParams::standard(1.0));
  EXPECT_EQ(s[0].branch, Branch::positive);
  EXPECT_EQ(s[2].branch, Branch::negative);
  for (int i = 0; i < 4; ++i) {
    Spinor e = Spinor::Zero();
    e(i) = 1.0;
    EXPECT_LE((s[static_cast<std::size_t>(i)].spinor - e).cwiseAbs().maxCoeff(), 1e-15);
  }
  EXPECT_DOUBLE_EQ(s[0].energy, 1.0);
  EXPECT_LE(s[0].lower().norm(), 1e-15);
}

TEST(PlaneWave, LowerSpinorFollowsFromUpper) {
  const Momentum k{0.0, 0.0, 0.3};
  const auto s = plane_wave_solve(k, GeneralizedParams::standard(1.0));
  for (std::size_t i = 0; i < 2; ++i) {
    const double eps = s[i].energy;
    EXPECT_NEAR(eps, std::sqrt(1.09), 1e-14);
    const TwoSpinor expected = pauli(3) * s[i].upper() * (0.3 / (eps + 1.0));
    EXPECT_LE((s[i].lower() - expected).cwiseAbs().maxCoeff(), 1e-14);
  }
}

TEST(PlaneWave, OrthonormalEigenpairsSolvingLinkedSystem) {
  Rng rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const auto p = random_params(rng);
    const Momentum k = random_k(rng);
    const auto s = plane_wave_solve(k, p);
    for (std::size_t a = 0; a < 4; ++a) {
      EXPECT_LE(eigen_residual(s[a], p), 1e-10);
      EXPECT_LE(bispinor_residual(s[a], p), 1e-10);
      EXPECT_NEAR(s[a].energy, dispersion(k, p, s[a].branch), 1e-10);
      for (std::size_t b = 0; b < 4; ++b) {
        EXPECT_LE(std::abs(s[a].spinor.dot(s[b].spinor) - (a == b ? 1.0 : 0.0)), 1e-10);
      }
    }
  }
}

TEST(PlaneWave, DegeneratePairsAreReproducible) {
  const Momentum k{0.3, -1.2, 0.7};
  const auto a = plane_wave_solve(k, kShifted);
  const auto b = plane_wave_solve(k, kShifted);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(a[i].spinor, b[i].spinor);
}

TEST(PlaneWave, MasslessAtShellApexUsesCanonicalBasis) {
  const auto p = GeneralizedParams::from_physical(0.0, 0.2, {0.0, 0.0, 0.5});
  const auto s = plane_wave_solve({0.0, 0.0, -0.5}, p);
  for (std::size_t a = 0; a < 4; ++a) {
    EXPECT_NEAR(s[a].energy, -0.2, 1e-15);
    EXPECT_LE(eigen_residual(s[a], p), 1e-15);
  }
}

TEST(KleinGordon, PlaneWavesSolveIt) {
  Rng rng(6);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = random_params(rng);
    const Momentum k = random_k(rng);
    for (const auto& s : plane_wave_solve(k, p)) {
      EXPECT_LE(kg_residual(k, s.energy, s.spinor, p), 1e-10);
    }
  }
}

TEST(KleinGordon, OffShellSpinorFails) {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = random_params(rng);
    const Momentum k = random_k(rng);
    const double top = std::max(std::pow(dispersion(k, p, Branch::positive), 2),
                                std::pow(dispersion(k, p, Branch::negative), 2));
    const double eps = std::sqrt(top + rng.uniform(0.5, 1.0));
    EXPECT_GT(kg_residual(k, eps, testing::random_unit_spinor(rng), p), 1e-3);
  }
}

TEST(KleinGordon, StandardCaseIsClassic) {
  const auto p = GeneralizedParams::standard(1.2);
  const Momentum k{0.4, 0.1, -0.3};
  EXPECT_LE(max_abs(kg_matrix(k, p) - (k.squaredNorm() + 1.44) * ComplexMatrix4::Identity()), 1e-15);
  Rng rng(8);
  const Spinor u = testing::random_unit_spinor(rng);
  EXPECT_LE(kg_residual(k, std::sqrt(1.44 + k.squaredNorm()), u, p), 1e-14);
}

TEST(KleinGordon, SquareOfHamiltonian) {
  EXPECT_EQ(dirac_square_equals_kg(Momentum::Zero(), GeneralizedParams::standard(1.0)), 0.0);
  Rng rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    EXPECT_LE(dirac_square_equals_kg(random_k(rng), random_params(rng)), 1e-10);
  }
}

TEST(KleinGordon, MomentumShiftCrossTerm) {
  const auto p = GeneralizedParams::from_physical(0.8, 0.0, {0.3, -0.2, 0.6});
  const Momentum k{1.0, 0.5, -0.25};
  const double cross = 2.0 * (0.3 * 1.0 - 0.2 * 0.5 - 0.6 * 0.25);
  const double scalar = k.squaredNorm() + 0.64 + 0.49;
  EXPECT_LE(max_abs(kg_matrix(k, p) - (scalar + cross) * ComplexMatrix4::Identity()), 1e-15);
}

TEST(GaugeMap, ShiftsKinematics) {
  const auto s = plane_wave_solve(Momentum::Zero(), kShifted)[0];
  const auto mapped = gauge_map_to_standard(s, kShifted);
  EXPECT_EQ(mapped.k, Momentum(0.0, 0.0, 0.25));
  EXPECT_NEAR(mapped.energy, 1.0307764064044151, 1e-15);
  EXPECT_NEAR(mapped.energy, dispersion(mapped.k, GeneralizedParams::standard(1.0), Branch::positive),
              1e-15);
  EXPECT_EQ(mapped.spinor, s.spinor);
  EXPECT_LE(eigen_residual(mapped, GeneralizedParams::standard(1.0)), 1e-10);
}

TEST(GaugeMap, StandardInputUnchanged) {
  const auto p = GeneralizedParams::standard(2.0);
  const auto s = plane_wave_solve({0.1, 0.2, 0.3}, p)[3];
  const auto mapped = gauge_map_to_standard(s, p);
  EXPECT_EQ(mapped.k, s.k);
  EXPECT_EQ(mapped.energy, s.energy);
  EXPECT_EQ(mapped.spinor, s.spinor);
}

TEST(GaugeMap, RoundTripAndResiduals) {
  Rng rng(10);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = random_params(rng);
    for (const auto& s : plane_wave_solve(random_k(rng), p)) {
      const auto mapped = gauge_map_to_standard(s, p);
      EXPECT_LE(eigen_residual(mapped, GeneralizedParams::standard(p.m0())), 1e-10);
      const auto back = gauge_map_from_standard(mapped, p);
      EXPECT_LE((back.k - s.k).cwiseAbs().maxCoeff(), 1e-12);
      EXPECT_LE(std::abs(back.energy - s.energy), 1e-12);
      EXPECT_EQ(back.spinor, s.spinor);
    }
  }
}

TEST(GaugeMap, RejectsNonSolution) {
  auto s = plane_wave_solve(Momentum::Zero(), kShifted)[0];
  s.energy += 0.1;
  EXPECT_THROW(gauge_map_to_standard(s, kShifted), std::invalid_argument);
  const auto good = plane_wave_solve(Momentum::Zero(), kShifted)[0];
  EXPECT_THROW(gauge_map_from_standard(good, kShifted), std::invalid_argument);
}

TEST(RestEnergies, BothReadings) {
  const auto r = rest_energies(kShifted);
  EXPECT_EQ(r.at_zero_kinetic_momentum, 1.0);
  EXPECT_NEAR(r.at_zero_grid_momentum, 0.5307764064044151, 1e-15);
}

}  // namespace
}  // namespace gendirac
