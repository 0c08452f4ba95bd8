#pragma once

// Invariance conditions for the first-order equation
//
//     [ gamma^mu d_mu + B_c ] psi = 0,   B_c = a I + c_mu gamma^mu,
//
// under a transform T with spinor representation S and a phase function
// phi(x) = zeta_mu x^mu + zeta_c. The condition on B_c is
//
//     B_c - S B_c S^-1 = i (zeta_0 gamma^0 - zeta_j gamma^j).
//
// Phase functions are stored in the component order of that contraction.

#include <array>
#include <cstdint>
#include <vector>

#include "gendirac/clifford.hpp"
#include "gendirac/poincare.hpp"
#include "gendirac/report.hpp"

namespace gendirac {

struct PhaseFunction {
  ComplexVec4 zeta{};
  Complex zeta_c{};

  /// phi(x) = zeta_mu x^mu + zeta_c with x = (t, x, y, z).
  Complex value(const std::array<double, 4>& x) const;

  /// zeta_0 gamma^0 - zeta_1 gamma^1 - zeta_2 gamma^2 - zeta_3 gamma^3.
  ComplexMatrix4 contraction() const;

  bool is_zero(double tol = 0.0) const;
};

/// Free parameters of the generalized equation. a and c_mu must be purely
/// imaginary (Hermitian Hamiltonian); the physical reading is
///   m0 = -i a,  eps_tilde = i c_0,  p_tilde_j = -i c_j.
class GeneralizedParams {
 public:
  /// Throws std::invalid_argument unless a and c are purely imaginary
  /// (within 1e-14) and m0 = -i a >= 0.
  GeneralizedParams(Complex a, const ComplexVec4& c);

  static GeneralizedParams from_physical(double m0, double eps_tilde,
                                         const std::array<double, 3>& p_tilde);
  static GeneralizedParams standard(double m0) { return from_physical(m0, 0.0, {0.0, 0.0, 0.0}); }

  Complex a() const { return a_; }
  const ComplexVec4& c() const { return c_; }

  double m0() const { return a_.imag(); }
  double eps_tilde() const { return -c_[0].imag(); }
  std::array<double, 3> p_tilde() const { return {c_[1].imag(), c_[2].imag(), c_[3].imag()}; }

  /// True when c = 0 (standard Dirac).
  bool is_standard() const;

  /// B_c = a I + sum_mu c_mu gamma^mu.
  ComplexMatrix4 constant_matrix() const;

 private:
  Complex a_;
  ComplexVec4 c_;
};

/// B_c = a I + sum_mu c_mu gamma^mu for arbitrary complex a, c.
ComplexMatrix4 constant_matrix(Complex a, const ComplexVec4& c);

/// Phase function compensating a rotation by theta about `axis`. For axis 3:
///   zeta_1 = i c_1 (1 - cos theta) + i c_2 sin theta
///   zeta_2 = i c_2 (1 - cos theta) - i c_1 sin theta
/// and cyclic (1 -> 2 -> 3) analogues for the other axes.
PhaseFunction zeta_rotation(const ComplexVec4& c, int axis, double theta);

/// Phase function compensating a boost of rapidity eta along axis j:
///   zeta_0 = 2i c_0 sinh^2(eta/2) - 2 c_j sinh(eta/2) cosh(eta/2)
///   zeta_j = -2i c_j sinh^2(eta/2) - 2 c_0 sinh(eta/2) cosh(eta/2)
PhaseFunction zeta_boost(const ComplexVec4& c, int axis, double eta);

/// zeta_rotation or zeta_boost, whichever matches the transform.
PhaseFunction zeta_for(const ComplexVec4& c, const PoincareTransform& transform);

/// || B_c - S B_c S^-1 - i zeta.contraction() ||_max.
double bc_condition_residual(const GeneralizedParams& params, const PoincareTransform& transform,
                             const PhaseFunction& phi);

/// Same with unconstrained complex a, c (negative tests).
double bc_condition_residual(Complex a, const ComplexVec4& c, const PoincareTransform& transform,
                             const PhaseFunction& phi);

/// e^{i phi(x)} psi.
Spinor phase_apply(const Spinor& psi, const PhaseFunction& phi, const std::array<double, 4>& x);

/// Rotation-reduced ansatz for the first-order coefficients:
///   B^t = [[p I, q I], [s I, t I]],  B^j = [[e sigma^j, f sigma^j], [g sigma^j, h sigma^j]].
struct FirstOrderAnsatz {
  Complex e{}, f{}, g{}, h{};
  Complex p{}, q{}, s{}, t{};

  static FirstOrderAnsatz from_vector(const std::array<Complex, 8>& v);
  std::array<Complex, 8> to_vector() const { return {e, f, g, h, p, q, s, t}; }

  MatrixQuad matrices() const;
};

/// Boost constraints on the ansatz, for each boost axis j with K = gamma_j gamma_0:
///   {B^t, K} = 0,  {B^j, K} = 0,  [B^k, K] = 0 (k != j).
/// Returns the twelve matrices whose vanishing is required.
std::vector<ComplexMatrix4> boost_constraint_matrices(const MatrixQuad& b);

/// Max entry over boost_constraint_matrices.
double boost_constraint_residual(const FirstOrderAnsatz& ansatz);

/// Max over [B_c, gamma_k gamma_l] and [B_c, gamma_k gamma_0].
double bc_commutator_residual(const ComplexMatrix4& bc);

/// Dimension of the null space of the linear boost constraints on the
/// eight ansatz coefficients.
int ansatz_solution_space_dimension(double relative_tol = 1e-10);

/// Dimension of the space of B_c commuting with every gamma_k gamma_l and
/// gamma_k gamma_0. `hermitian_basis_only` restricts B_c to the span of the
/// 15 basis elements other than gamma^5.
int bc_commutant_dimension(bool hermitian_basis_only, double relative_tol = 1e-10);

struct UniquenessReport {
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  int solution_space_dimension = 0;
  int expected_solution_space_dimension = 2;  // one scale each for B^t and B^j
  int bc_commutant_dimension = 0;             // within the Hermitian-basis ansatz
  int bc_commutant_dimension_unrestricted = 0;
  std::vector<CheckResult> checks;

  bool passed() const { return all_passed(checks); }
};

/// Numerical evidence that phi = 0 admits only the gamma structure and
/// B_c = a I. `tol` bounds the residuals that must vanish.
UniquenessReport verify_phi0_uniqueness(std::size_t trials, std::uint64_t seed,
                                        double tol = 1e-10);

}  // namespace gendirac
