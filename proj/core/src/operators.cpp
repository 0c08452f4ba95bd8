#include "gendirac/operators.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace gendirac {

namespace {

// Below this branch gap (m0 = 0 and k + p_tilde = 0) H is a multiple of I
// and the canonical basis is already an eigenbasis.
constexpr double kDegenerateGap = 1e-14;

std::array<ComplexMatrix4, 3> make_alphas() {
  std::array<ComplexMatrix4, 3> a;
  for (int j = 1; j <= 3; ++j) {
    auto& m = a[static_cast<std::size_t>(j - 1)];
    m.setZero();
    m.topRightCorner<2, 2>() = pauli(j);
    m.bottomLeftCorner<2, 2>() = pauli(j);
  }
  return a;
}

// Orthonormalize the projections of two canonical vectors, in order.
std::array<Spinor, 2> project_pair(const ComplexMatrix4& projector, int first) {
  Spinor u = projector.col(first);
  u.normalize();
  Spinor v = projector.col(first + 1);
  v -= u.dot(v) * u;
  v.normalize();
  return {u, v};
}

double rayleigh_energy(const ComplexMatrix4& h, const Spinor& u) { return u.dot(h * u).real(); }

}  // namespace

const ComplexMatrix4& alpha(int j) {
  static const auto table = make_alphas();
  if (j < 1 || j > 3) throw std::out_of_range("alpha index must be in 1..3");
  return table[static_cast<std::size_t>(j - 1)];
}

const ComplexMatrix4& beta() { return gamma(0); }

ComplexMatrix4 alpha_dot(const Momentum& v) {
  return v.x() * alpha(1) + v.y() * alpha(2) + v.z() * alpha(3);
}

ComplexMatrix2 sigma_dot(const Momentum& v) {
  return v.x() * pauli(1) + v.y() * pauli(2) + v.z() * pauli(3);
}

Momentum p_tilde_vector(const GeneralizedParams& params) {
  const auto p = params.p_tilde();
  return {p[0], p[1], p[2]};
}

ComplexMatrix4 hamiltonian_matrix(const Momentum& k, const GeneralizedParams& params) {
  return alpha_dot(k + p_tilde_vector(params)) + params.m0() * beta() -
         params.eps_tilde() * ComplexMatrix4::Identity();
}

double dispersion(const Momentum& k, const GeneralizedParams& params, Branch branch) {
  const double m0 = params.m0();
  const double root = std::sqrt(m0 * m0 + (k + p_tilde_vector(params)).squaredNorm());
  return (branch == Branch::positive ? root : -root) - params.eps_tilde();
}

std::array<PlaneWaveSolution, 4> plane_wave_solve(const Momentum& k,
                                                  const GeneralizedParams& params) {
  const ComplexMatrix4 h = hamiltonian_matrix(k, params);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix4> solver(h);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("Hermitian eigensolver failed");
  }
  // Eigenvalues ascend: columns 0,1 span the - branch, 2,3 the + branch.
  const auto& vectors = solver.eigenvectors();
  ComplexMatrix4 plus = vectors.rightCols<2>() * vectors.rightCols<2>().adjoint();
  ComplexMatrix4 minus = vectors.leftCols<2>() * vectors.leftCols<2>().adjoint();
  if (solver.eigenvalues()(2) - solver.eigenvalues()(1) < kDegenerateGap) {
    plus.setZero();
    plus.diagonal() << 1.0, 1.0, 0.0, 0.0;
    minus = ComplexMatrix4::Identity() - plus;
  }

  std::array<PlaneWaveSolution, 4> out;
  const auto pos = project_pair(plus, 0);
  const auto neg = project_pair(minus, 2);
  for (std::size_t i = 0; i < 4; ++i) {
    auto& s = out[i];
    s.k = k;
    s.branch = i < 2 ? Branch::positive : Branch::negative;
    s.spinor = i < 2 ? pos[i] : neg[i - 2];
    s.energy = rayleigh_energy(h, s.spinor);
  }
  return out;
}

double eigen_residual(const PlaneWaveSolution& solution, const GeneralizedParams& params) {
  const Spinor r =
      hamiltonian_matrix(solution.k, params) * solution.spinor - solution.energy * solution.spinor;
  return r.cwiseAbs().maxCoeff();
}

double bispinor_residual(const PlaneWaveSolution& solution, const GeneralizedParams& params) {
  const ComplexMatrix2 sp = sigma_dot(solution.k + p_tilde_vector(params));
  const double shifted = solution.energy + params.eps_tilde();
  const TwoSpinor phi = solution.upper();
  const TwoSpinor chi = solution.lower();
  const TwoSpinor r1 = (shifted - params.m0()) * phi - sp * chi;
  const TwoSpinor r2 = (shifted + params.m0()) * chi - sp * phi;
  return std::max(r1.cwiseAbs().maxCoeff(), r2.cwiseAbs().maxCoeff());
}

ComplexMatrix4 kg_matrix(const Momentum& k, const GeneralizedParams& params) {
  const Momentum pt = p_tilde_vector(params);
  const double m0 = params.m0();
  const double et = params.eps_tilde();
  const double scalar = k.squaredNorm() + m0 * m0 + pt.squaredNorm() + et * et + 2.0 * pt.dot(k);
  return scalar * ComplexMatrix4::Identity() - 2.0 * m0 * et * beta() - 2.0 * et * alpha_dot(k) -
         2.0 * et * alpha_dot(pt);
}

double kg_residual(const Momentum& k, double energy, const Spinor& spinor,
                   const GeneralizedParams& params) {
  const Spinor r = energy * energy * spinor - kg_matrix(k, params) * spinor;
  return r.cwiseAbs().maxCoeff();
}

double dirac_square_equals_kg(const Momentum& k, const GeneralizedParams& params) {
  const ComplexMatrix4 h = hamiltonian_matrix(k, params);
  return max_abs(h * h - kg_matrix(k, params));
}

PlaneWaveSolution gauge_map_to_standard(const PlaneWaveSolution& solution,
                                        const GeneralizedParams& params, double tol) {
  if (!(eigen_residual(solution, params) <= tol)) {
    throw std::invalid_argument("solution does not solve the generalized Hamiltonian");
  }
  PlaneWaveSolution mapped = solution;
  mapped.k = solution.k + p_tilde_vector(params);
  mapped.energy = solution.energy + params.eps_tilde();
  return mapped;
}

PlaneWaveSolution gauge_map_from_standard(const PlaneWaveSolution& solution,
                                          const GeneralizedParams& params, double tol) {
  if (!(eigen_residual(solution, GeneralizedParams::standard(params.m0())) <= tol)) {
    throw std::invalid_argument("solution does not solve the standard Hamiltonian");
  }
  PlaneWaveSolution mapped = solution;
  mapped.k = solution.k - p_tilde_vector(params);
  mapped.energy = solution.energy - params.eps_tilde();
  return mapped;
}

RestEnergies rest_energies(const GeneralizedParams& params) {
  return {params.m0(), dispersion(Momentum::Zero(), params, Branch::positive)};
}

}  // namespace gendirac
