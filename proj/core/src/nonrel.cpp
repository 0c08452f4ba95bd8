#include "gendirac/nonrel.hpp"

#include <cmath>
#include <stdexcept>

namespace gendirac {

void NonRelParams::validate() const {
  if (!(m0 > 0.0) || !std::isfinite(m0)) throw std::invalid_argument("m0 must be positive");
  if (!(c_light > 0.0) || !std::isfinite(c_light)) {
    throw std::invalid_argument("c_light must be positive");
  }
  if (!std::isfinite(eps_tilde) || !std::isfinite(a0) || !std::isfinite(e_charge) ||
      !c_tilde.allFinite() || !vector_potential.allFinite()) {
    throw std::invalid_argument("non-relativistic parameters must be finite");
  }
}

double pauli_energy(const Momentum& k, const NonRelParams& params) {
  params.validate();
  if (!params.vector_potential.isZero(0.0)) {
    throw std::invalid_argument("only A_j = 0 is supported");
  }
  return (k + params.c_tilde).squaredNorm() / (2.0 * params.m0) + params.potential_energy() -
         params.eps_tilde;
}

LevyLeblondSolution levy_leblond_solve(const Momentum& k, const NonRelParams& params,
                                       const TwoSpinor& phi0) {
  params.validate();
  if (!(phi0.norm() > 0.0)) throw std::invalid_argument("phi0 must be nonzero");
  const Momentum p = k + params.c_tilde;
  LevyLeblondSolution s;
  s.energy = p.squaredNorm() / (2.0 * params.m0) + params.potential_energy() - params.eps_tilde;
  s.phi = phi0;
  s.chi = sigma_dot(p) * phi0 / (2.0 * params.m0 * params.c_light);
  const double norm = std::sqrt(s.phi.squaredNorm() + s.chi.squaredNorm());
  s.phi /= norm;
  s.chi /= norm;
  return s;
}

double levy_leblond_residual(const Momentum& k, const NonRelParams& params,
                             const LevyLeblondSolution& solution) {
  const ComplexMatrix2 sp = sigma_dot(k + params.c_tilde);
  const double shifted = solution.energy + params.eps_tilde - params.potential_energy();
  const TwoSpinor r1 = shifted * solution.phi - params.c_light * sp * solution.chi;
  const TwoSpinor r2 = 2.0 * params.m0 * params.c_light * solution.chi - sp * solution.phi;
  return std::max(r1.cwiseAbs().maxCoeff(), r2.cwiseAbs().maxCoeff());
}

double dirac_energy(const Momentum& k, const NonRelParams& params, Branch branch) {
  params.validate();
  const double c = params.c_light;
  const double root =
      c * std::sqrt(params.m0 * params.m0 * c * c + (k + params.c_tilde).squaredNorm());
  return (branch == Branch::positive ? root : -root) - params.eps_tilde +
         params.potential_energy();
}

namespace {

// sqrt(m^2 c^4 + P^2 c^2) and its difference from m c^2, P^2 c^2 / (S + m c^2).
struct RelativisticParts {
  double total;
  double kinetic;
  double p2;
};

RelativisticParts relativistic_parts(const Momentum& k, const NonRelParams& params) {
  params.validate();
  const double c = params.c_light;
  const double rest = params.m0 * c * c;
  const double p2 = (k + params.c_tilde).squaredNorm();
  const double total = std::sqrt(rest * rest + p2 * c * c);
  return {total, p2 * c * c / (total + rest), p2};
}

}  // namespace

double dirac_kinetic_energy(const Momentum& k, const NonRelParams& params) {
  return relativistic_parts(k, params).kinetic - params.eps_tilde + params.potential_energy();
}

double limit_difference(const Momentum& k, const NonRelParams& params) {
  const auto parts = relativistic_parts(k, params);
  const double c = params.c_light;
  const double denom = parts.total + params.m0 * c * c;
  return -parts.p2 * parts.p2 * c * c / (2.0 * params.m0 * denom * denom);
}

NonRelError nonrel_error(const Momentum& k, const NonRelParams& params) {
  params.validate();
  if (!((k + params.c_tilde).norm() < params.m0 * params.c_light)) {
    throw std::domain_error("non-relativistic limit needs |k + c~| < m0 c");
  }
  const double diff = std::abs(limit_difference(k, params));
  const double pauli = pauli_energy(k, params);
  if (pauli == 0.0) return {diff, true};
  return {diff / std::abs(pauli), false};
}

}  // namespace gendirac
