#pragma once

// Non-relativistic limits of the generalized equation with c restored and
// hbar = 1. Only constant potentials are supported: with A_j = 0 and a
// constant momentum shift the magnetic and curl terms of the Pauli form
// vanish, leaving
//
//     eps_pauli = |k + c~|^2 / (2 m0) + e A0 - eps~.

#include <utility>

#include "gendirac/clifford.hpp"
#include "gendirac/operators.hpp"

namespace gendirac {

struct NonRelParams {
  double m0 = 1.0;
  double eps_tilde = 0.0;
  Momentum c_tilde = Momentum::Zero();
  double c_light = 1.0;
  double a0 = 0.0;
  double e_charge = 0.0;
  Momentum vector_potential = Momentum::Zero();

  /// Throws std::invalid_argument unless m0 > 0, c_light > 0 and all
  /// fields are finite.
  void validate() const;

  double potential_energy() const { return e_charge * a0; }
};

/// Throws std::invalid_argument for a nonzero vector potential.
double pauli_energy(const Momentum& k, const NonRelParams& params);

struct LevyLeblondSolution {
  double energy = 0.0;
  TwoSpinor phi = TwoSpinor::Zero();
  TwoSpinor chi = TwoSpinor::Zero();
};

/// Solves (eps + eps~ - e A0) phi = c sigma.P chi and 2 m0 c chi = sigma.P phi
/// with P = k + c~, starting from the upper-spinor direction `phi0`. The
/// returned pair is normalized to |phi|^2 + |chi|^2 = 1.
LevyLeblondSolution levy_leblond_solve(const Momentum& k, const NonRelParams& params,
                                       const TwoSpinor& phi0 = TwoSpinor(1.0, 0.0));

/// Max residual of both Levy-Leblond equations.
double levy_leblond_residual(const Momentum& k, const NonRelParams& params,
                             const LevyLeblondSolution& solution);

/// +-c sqrt(m0^2 c^2 + |k + c~|^2) - eps~ + e A0.
double dirac_energy(const Momentum& k, const NonRelParams& params, Branch branch);

/// Positive-branch energy minus the rest energy m0 c^2, evaluated without
/// cancellation.
double dirac_kinetic_energy(const Momentum& k, const NonRelParams& params);

/// (eps_dirac - m0 c^2) - eps_pauli, evaluated without cancellation.
double limit_difference(const Momentum& k, const NonRelParams& params);

struct NonRelError {
  double value = 0.0;
  bool absolute = false;  // eps_pauli == 0: value is the absolute error
};

/// |(eps_dirac - m0 c^2) - eps_pauli| / |eps_pauli|. Throws std::domain_error
/// unless |k + c~| < m0 c.
NonRelError nonrel_error(const Momentum& k, const NonRelParams& params);

}  // namespace gendirac
