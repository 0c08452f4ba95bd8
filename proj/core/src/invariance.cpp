#include "gendirac/invariance.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/SVD>

#include "gendirac/random.hpp"

namespace gendirac {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kImaginaryTolerance = 1e-14;

using DynamicComplexMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;

int null_space_dimension(const DynamicComplexMatrix& system, double relative_tol) {
  Eigen::JacobiSVD<DynamicComplexMatrix> svd(system);
  const auto& sv = svd.singularValues();
  const double cutoff = relative_tol * (sv.size() > 0 ? sv(0) : 0.0);
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cutoff) ++rank;
  }
  return static_cast<int>(system.cols()) - rank;
}

// The six Lorentz generators gamma_k gamma_l (k<l) and gamma_k gamma_0.
std::array<ComplexMatrix4, 6> lorentz_generators() {
  std::array<ComplexMatrix4, 6> gens;
  std::size_t n = 0;
  for (int k = 1; k <= 3; ++k) {
    for (int l = k + 1; l <= 3; ++l) gens[n++] = gamma_lower(k) * gamma_lower(l);
  }
  for (int k = 1; k <= 3; ++k) gens[n++] = gamma_lower(k) * gamma_lower(0);
  return gens;
}

Complex random_complex(Rng& rng) { return {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)}; }

}  // namespace

Complex PhaseFunction::value(const std::array<double, 4>& x) const {
  Complex phi = zeta_c;
  for (std::size_t mu = 0; mu < 4; ++mu) phi += zeta[mu] * x[mu];
  return phi;
}

ComplexMatrix4 PhaseFunction::contraction() const {
  ComplexMatrix4 m = zeta[0] * gamma(0);
  for (int j = 1; j <= 3; ++j) m -= zeta[static_cast<std::size_t>(j)] * gamma(j);
  return m;
}

bool PhaseFunction::is_zero(double tol) const {
  for (const Complex& z : zeta) {
    if (std::abs(z) > tol) return false;
  }
  return std::abs(zeta_c) <= tol;
}

GeneralizedParams::GeneralizedParams(Complex a, const ComplexVec4& c) : a_(a), c_(c) {
  if (std::abs(a.real()) > kImaginaryTolerance) {
    throw std::invalid_argument("parameter a must be purely imaginary");
  }
  for (const Complex& cm : c) {
    if (std::abs(cm.real()) > kImaginaryTolerance) {
      throw std::invalid_argument("parameters c_mu must be purely imaginary");
    }
  }
  if (!(a.imag() >= 0.0) || !std::isfinite(a.imag())) {
    throw std::invalid_argument("rest mass m0 = -i a must be finite and non-negative");
  }
  for (const Complex& cm : c) {
    if (!std::isfinite(cm.imag())) throw std::invalid_argument("c_mu must be finite");
  }
}

GeneralizedParams GeneralizedParams::from_physical(double m0, double eps_tilde,
                                                   const std::array<double, 3>& p_tilde) {
  return GeneralizedParams(kI * m0, {-kI * eps_tilde, kI * p_tilde[0], kI * p_tilde[1],
                                     kI * p_tilde[2]});
}

bool GeneralizedParams::is_standard() const {
  for (const Complex& cm : c_) {
    if (cm != Complex{}) return false;
  }
  return true;
}

ComplexMatrix4 GeneralizedParams::constant_matrix() const {
  return gendirac::constant_matrix(a_, c_);
}

ComplexMatrix4 constant_matrix(Complex a, const ComplexVec4& c) {
  ComplexMatrix4 bc = a * ComplexMatrix4::Identity();
  for (int mu = 0; mu < 4; ++mu) bc += c[static_cast<std::size_t>(mu)] * gamma(mu);
  return bc;
}

PhaseFunction zeta_rotation(const ComplexVec4& c, int axis, double theta) {
  const auto [k, l] = rotation_plane(axis);
  const double one_minus_cos = 1.0 - std::cos(theta);
  const double sin_theta = std::sin(theta);
  const auto ku = static_cast<std::size_t>(k);
  const auto lu = static_cast<std::size_t>(l);
  PhaseFunction phi;
  phi.zeta[ku] = kI * c[ku] * one_minus_cos + kI * c[lu] * sin_theta;
  phi.zeta[lu] = kI * c[lu] * one_minus_cos - kI * c[ku] * sin_theta;
  return phi;
}

PhaseFunction zeta_boost(const ComplexVec4& c, int axis, double eta) {
  if (axis < 1 || axis > 3) throw std::out_of_range("boost axis must be in 1..3");
  const double sh = std::sinh(eta / 2.0);
  const double ch = std::cosh(eta / 2.0);
  const auto j = static_cast<std::size_t>(axis);
  PhaseFunction phi;
  phi.zeta[0] = 2.0 * kI * c[0] * sh * sh - 2.0 * c[j] * sh * ch;
  phi.zeta[j] = -2.0 * kI * c[j] * sh * sh - 2.0 * c[0] * sh * ch;
  return phi;
}

PhaseFunction zeta_for(const ComplexVec4& c, const PoincareTransform& transform) {
  return transform.kind() == TransformKind::rotation
             ? zeta_rotation(c, transform.axis(), transform.parameter())
             : zeta_boost(c, transform.axis(), transform.parameter());
}

double bc_condition_residual(Complex a, const ComplexVec4& c, const PoincareTransform& transform,
                             const PhaseFunction& phi) {
  const ComplexMatrix4 bc = constant_matrix(a, c);
  const ComplexMatrix4 transformed = transform.spinor_rep() * bc * transform.spinor_inverse();
  return max_abs(bc - transformed - kI * phi.contraction());
}

double bc_condition_residual(const GeneralizedParams& params, const PoincareTransform& transform,
                             const PhaseFunction& phi) {
  return bc_condition_residual(params.a(), params.c(), transform, phi);
}

Spinor phase_apply(const Spinor& psi, const PhaseFunction& phi, const std::array<double, 4>& x) {
  return std::exp(kI * phi.value(x)) * psi;
}

FirstOrderAnsatz FirstOrderAnsatz::from_vector(const std::array<Complex, 8>& v) {
  return FirstOrderAnsatz{v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]};
}

MatrixQuad FirstOrderAnsatz::matrices() const {
  const ComplexMatrix2 id = ComplexMatrix2::Identity();
  MatrixQuad b;
  b[0] << p * id, q * id, s * id, t * id;
  for (int j = 1; j <= 3; ++j) {
    const ComplexMatrix2& sj = pauli(j);
    b[static_cast<std::size_t>(j)] << e * sj, f * sj, g * sj, h * sj;
  }
  return b;
}

std::vector<ComplexMatrix4> boost_constraint_matrices(const MatrixQuad& b) {
  std::vector<ComplexMatrix4> out;
  out.reserve(12);
  for (int j = 1; j <= 3; ++j) {
    const ComplexMatrix4 k = gamma_lower(j) * gamma_lower(0);
    out.push_back(anticommutator(b[0], k));
    for (int m = 1; m <= 3; ++m) {
      const auto& bm = b[static_cast<std::size_t>(m)];
      out.push_back(m == j ? anticommutator(bm, k) : commutator(bm, k));
    }
  }
  return out;
}

double boost_constraint_residual(const FirstOrderAnsatz& ansatz) {
  double residual = 0.0;
  for (const auto& m : boost_constraint_matrices(ansatz.matrices())) {
    residual = std::max(residual, max_abs(m));
  }
  return residual;
}

double bc_commutator_residual(const ComplexMatrix4& bc) {
  double residual = 0.0;
  for (const auto& gen : lorentz_generators()) residual = std::max(residual, max_abs(commutator(bc, gen)));
  return residual;
}

int ansatz_solution_space_dimension(double relative_tol) {
  // Column i holds the stacked constraint entries for the i-th unit coefficient.
  DynamicComplexMatrix system(12 * 16, 8);
  for (int i = 0; i < 8; ++i) {
    std::array<Complex, 8> unit{};
    unit[static_cast<std::size_t>(i)] = 1.0;
    const auto constraints = boost_constraint_matrices(FirstOrderAnsatz::from_vector(unit).matrices());
    for (std::size_t n = 0; n < constraints.size(); ++n) {
      for (int r = 0; r < 4; ++r) {
        for (int col = 0; col < 4; ++col) {
          system(static_cast<Eigen::Index>(16 * n + 4 * r + col), i) = constraints[n](r, col);
        }
      }
    }
  }
  return null_space_dimension(system, relative_tol);
}

int bc_commutant_dimension(bool hermitian_basis_only, double relative_tol) {
  const auto& basis = clifford_basis();
  const std::size_t n_elements = hermitian_basis_only ? 15 : 16;  // gamma5 is last
  const auto gens = lorentz_generators();
  DynamicComplexMatrix system(static_cast<Eigen::Index>(gens.size() * 16),
                              static_cast<Eigen::Index>(n_elements));
  for (std::size_t i = 0; i < n_elements; ++i) {
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const ComplexMatrix4 comm = commutator(basis[i].matrix, gens[g]);
      for (int r = 0; r < 4; ++r) {
        for (int col = 0; col < 4; ++col) {
          system(static_cast<Eigen::Index>(16 * g + 4 * r + col), static_cast<Eigen::Index>(i)) =
              comm(r, col);
        }
      }
    }
  }
  return null_space_dimension(system, relative_tol);
}

UniquenessReport verify_phi0_uniqueness(std::size_t trials, std::uint64_t seed, double tol) {
  if (trials < 1) throw std::invalid_argument("verify_phi0_uniqueness needs trials >= 1");
  UniquenessReport report;
  report.seed = seed;
  report.trials = trials;
  Rng rng(seed);

  // (1) gamma^mu is covariant under every rotation and boost.
  double covariance = 0.0;
  const MatrixQuad gammas = gamma_set();
  for (int axis = 1; axis <= 3; ++axis) {
    for (double parameter : {-2.0, -1.0, -0.3, 0.3, 1.0, 2.0}) {
      covariance = std::max(covariance,
                            covariance_residual(gammas, PoincareTransform::rotation(axis, parameter)));
      covariance = std::max(covariance,
                            covariance_residual(gammas, PoincareTransform::boost(axis, parameter)));
    }
  }
  for (std::size_t i = 0; i < trials; ++i) {
    const int axis = 1 + rng.index(3);
    const double parameter = rng.uniform(-2.0, 2.0);
    const auto transform = rng.uniform() < 0.5 ? PoincareTransform::rotation(axis, parameter)
                                               : PoincareTransform::boost(axis, parameter);
    covariance = std::max(covariance, covariance_residual(gammas, transform));
  }
  report.checks.push_back(upper_check("phi0_gamma_covariance", covariance, tol));

  // (2a) the gamma-structured ansatz, with independent scales per family.
  double gamma_ansatz = boost_constraint_residual({0, 1, -1, 0, 1, 0, 0, -1});
  for (std::size_t i = 0; i < trials; ++i) {
    const Complex spatial = random_complex(rng);
    const Complex temporal = random_complex(rng);
    gamma_ansatz = std::max(
        gamma_ansatz,
        boost_constraint_residual({0, spatial, -spatial, 0, temporal, 0, 0, -temporal}));
  }
  report.checks.push_back(upper_check("phi0_gamma_ansatz_constraints", gamma_ansatz, tol));

  // (2b) generic candidates violate at least one constraint.
  double weakest_violation = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < trials; ++i) {
    std::array<Complex, 8> v;
    for (auto& coeff : v) coeff = random_complex(rng);
    weakest_violation =
        std::min(weakest_violation, boost_constraint_residual(FirstOrderAnsatz::from_vector(v)));
  }
  report.checks.push_back(lower_check("phi0_random_ansatz_violation", weakest_violation, 1e-3));

  // (2c) zero residual should leave one scale per family.
  report.solution_space_dimension = ansatz_solution_space_dimension();
  report.checks.push_back(upper_check(
      "phi0_solution_space_dim",
      std::abs(report.solution_space_dimension - report.expected_solution_space_dimension), 0.0));

  // (3) B_c commuting with all generators is a multiple of I.
  report.bc_commutant_dimension = bc_commutant_dimension(true);
  report.bc_commutant_dimension_unrestricted = bc_commutant_dimension(false);
  report.checks.push_back(
      upper_check("phi0_bc_commutant_dim", std::abs(report.bc_commutant_dimension - 1), 0.0));
  report.checks.push_back(upper_check(
      "phi0_bc_identity_commutes", bc_commutator_residual(ComplexMatrix4::Identity()), tol));

  double weakest_bc = bc_commutator_residual(gamma(1));
  const auto& basis = clifford_basis();
  for (std::size_t i = 0; i < trials; ++i) {
    ComplexMatrix4 bc = ComplexMatrix4::Zero();
    for (std::size_t n = 1; n < 15; ++n) bc += random_complex(rng) * basis[n].matrix;
    weakest_bc = std::min(weakest_bc, bc_commutator_residual(bc));
  }
  report.checks.push_back(lower_check("phi0_bc_non_scalar_rejected", weakest_bc, 1e-3));

  return report;
}

}  // namespace gendirac
