#pragma once

// Momentum-space generalized Dirac Hamiltonian (natural units)
//
//     H(k) = alpha . (k + p_tilde) + m0 beta - eps_tilde I,
//
// alpha_j = offdiag(sigma_j, sigma_j), beta = gamma^0. A plane wave
// psi = u e^{i(k.x - eps t)} solves the generalized equation iff
// H(k) u = eps u.

#include <array>

#include <Eigen/Core>

#include "gendirac/clifford.hpp"
#include "gendirac/invariance.hpp"

namespace gendirac {

using Momentum = Eigen::Vector3d;

enum class Branch { positive, negative };

const ComplexMatrix4& alpha(int j);
const ComplexMatrix4& beta();

/// alpha . v for a real 3-vector.
ComplexMatrix4 alpha_dot(const Momentum& v);

/// sigma . v for a real 3-vector.
ComplexMatrix2 sigma_dot(const Momentum& v);

Momentum p_tilde_vector(const GeneralizedParams& params);

ComplexMatrix4 hamiltonian_matrix(const Momentum& k, const GeneralizedParams& params);

/// +-sqrt(m0^2 + |k + p_tilde|^2) - eps_tilde.
double dispersion(const Momentum& k, const GeneralizedParams& params, Branch branch);

struct PlaneWaveSolution {
  Momentum k = Momentum::Zero();
  double energy = 0.0;
  Branch branch = Branch::positive;
  Spinor spinor = Spinor::Zero();

  TwoSpinor upper() const { return spinor.head<2>(); }
  TwoSpinor lower() const { return spinor.tail<2>(); }
};

/// Four orthonormal eigenpairs in the order (+, +, -, -). Within a branch
/// the spinors are the branch projections of (e1, e2) for + and (e3, e4)
/// for -, Gram-Schmidt orthonormalized in that order, so degenerate pairs
/// come out identical on every run.
std::array<PlaneWaveSolution, 4> plane_wave_solve(const Momentum& k,
                                                  const GeneralizedParams& params);

/// || H(k) u - eps u ||_max.
double eigen_residual(const PlaneWaveSolution& solution, const GeneralizedParams& params);

/// Max residual of the linked two-spinor system
///   (eps + eps_tilde - m0) phi - sigma.(k + p_tilde) chi = 0
///   (eps + eps_tilde + m0) chi - sigma.(k + p_tilde) phi = 0.
double bispinor_residual(const PlaneWaveSolution& solution, const GeneralizedParams& params);

/// Momentum-space generalized Klein-Gordon matrix
///   (k^2 + m0^2 + p~^2 + eps~^2 + 2 p~.k) I - 2 m0 eps~ beta
///   - 2 eps~ alpha.k - 2 eps~ alpha.p~.
ComplexMatrix4 kg_matrix(const Momentum& k, const GeneralizedParams& params);

/// || eps^2 u - M_KG(k) u ||_max.
double kg_residual(const Momentum& k, double energy, const Spinor& spinor,
                   const GeneralizedParams& params);

/// || H(k)^2 - M_KG(k) ||_max.
double dirac_square_equals_kg(const Momentum& k, const GeneralizedParams& params);

/// Shift (k, eps) -> (k + p_tilde, eps + eps_tilde) with the spinor kept.
/// The result solves the standard Hamiltonian of the same mass. Throws
/// std::invalid_argument if `solution` fails its own eigen-residual by more
/// than `tol`.
PlaneWaveSolution gauge_map_to_standard(const PlaneWaveSolution& solution,
                                        const GeneralizedParams& params, double tol = 1e-10);

/// Inverse shift; `solution` must solve the standard Hamiltonian.
PlaneWaveSolution gauge_map_from_standard(const PlaneWaveSolution& solution,
                                          const GeneralizedParams& params, double tol = 1e-10);

struct RestEnergies {
  double at_zero_kinetic_momentum = 0.0;  // E = eps + eps_tilde at k + p_tilde = 0, i.e. m0
  double at_zero_grid_momentum = 0.0;     // eps at k = 0, sqrt(m0^2 + p~^2) - eps~
};

RestEnergies rest_energies(const GeneralizedParams& params);

}  // namespace gendirac
