#include "suites.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string_view>

#include <Eigen/Eigenvalues>

#include "gendirac/clifford.hpp"
#include "gendirac/invariance.hpp"
#include "gendirac/nonrel.hpp"
#include "gendirac/operators.hpp"
#include "gendirac/poincare.hpp"

namespace gendirac::cli {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Complex random_complex(Rng& rng) { return {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)}; }

ComplexMatrix4 random_matrix(Rng& rng) {
  ComplexMatrix4 m;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) m(r, c) = random_complex(rng);
  }
  return m;
}

PoincareTransform random_transform(Rng& rng, double lo, double hi) {
  const int axis = 1 + rng.index(3);
  const double parameter = rng.signed_magnitude(lo, hi);
  return rng.uniform() < 0.5 ? PoincareTransform::rotation(axis, parameter)
                             : PoincareTransform::boost(axis, parameter);
}

ComplexVec4 imaginary_vector(Rng& rng, double lo, double hi) {
  ComplexVec4 c;
  for (auto& z : c) z = {0.0, rng.signed_magnitude(lo, hi)};
  return c;
}

GeneralizedParams random_params(Rng& rng) {
  const double m0 = rng.uniform(0.1, 5.0);
  const double eps = rng.uniform(-1.0, 1.0);
  std::array<double, 3> p;
  for (auto& x : p) x = rng.uniform(-1.0, 1.0);
  return GeneralizedParams::from_physical(m0, eps, p);
}

Momentum random_momentum(Rng& rng, double scale) {
  return {rng.uniform(-scale, scale), rng.uniform(-scale, scale), rng.uniform(-scale, scale)};
}

}  // namespace

std::vector<CheckResult> clifford_suite(Rng& rng, std::size_t trials) {
  double anti = 0.0;
  double hermitian = 0.0;
  double g5 = 0.0;
  for (int mu = 0; mu < 4; ++mu) {
    hermitian = std::max(hermitian, max_abs(gamma(mu) - gamma(mu).adjoint()));
    g5 = std::max(g5, max_abs(anticommutator(gamma5(), gamma(mu))));
    for (int nu = 0; nu < 4; ++nu) {
      const ComplexMatrix4 expected = (mu == nu ? 2.0 : 0.0) * ComplexMatrix4::Identity();
      anti = std::max(anti, max_abs(anticommutator(gamma(mu), gamma(nu)) - expected));
    }
  }
  double round_trip = 0.0;
  for (std::size_t i = 0; i < trials; ++i) {
    const ComplexMatrix4 m = random_matrix(rng);
    round_trip = std::max(round_trip, max_abs(basis_decompose(m).reconstruct() - m));
  }
  return {
      upper_check("clifford_anticommutators", anti, 1e-14),
      upper_check("clifford_gamma_hermitian", hermitian, 1e-14),
      upper_check("clifford_gamma5_anticommutes", g5, 1e-14),
      upper_check("clifford_basis_orthonormal", basis_orthogonality_defect(), 1e-14),
      upper_check("clifford_decompose_round_trip", round_trip, 1e-13),
  };
}

std::vector<CheckResult> covariance_suite(Rng& rng, std::size_t trials) {
  const MatrixQuad gammas = gamma_set();
  double rotation = 0.0;
  double boost = 0.0;
  for (int axis = 1; axis <= 3; ++axis) {
    for (double p : {-2.0, -0.7, 0.7, 2.0}) {
      rotation = std::max(rotation, covariance_residual(gammas, PoincareTransform::rotation(axis, p)));
      boost = std::max(boost, covariance_residual(gammas, PoincareTransform::boost(axis, p)));
    }
  }
  for (std::size_t i = 0; i < trials; ++i) {
    const auto t = random_transform(rng, 0.0, 2.0);
    double& slot = t.kind() == TransformKind::rotation ? rotation : boost;
    slot = std::max(slot, covariance_residual(gammas, t));
  }

  double inverse = 0.0;
  for (std::size_t i = 0; i < trials; ++i) {
    const auto t = random_transform(rng, 0.0, 2.0);
    inverse = std::max(inverse, max_abs(t.spinor_rep() * t.inverse().spinor_rep() -
                                        ComplexMatrix4::Identity()));
  }

  double weakest = kInf;
  for (std::size_t i = 0; i < trials; ++i) {
    MatrixQuad perturbed = gammas;
    for (auto& g : perturbed) {
      const ComplexMatrix4 d = random_matrix(rng);
      g += 0.1 / max_abs(d) * d;
    }
    weakest = std::min(weakest, covariance_residual(perturbed, random_transform(rng, 0.25, 2.0)));
  }
  return {
      upper_check("covariance_rotations", rotation, 1e-10),
      upper_check("covariance_boosts", boost, 1e-10),
      upper_check("spinor_inverse_consistency", inverse, 1e-10),
      lower_check("covariance_perturbed_rejected", weakest, 1e-3),
  };
}

std::vector<CheckResult> zeta_suite(Rng& rng, std::size_t trials) {
  double rotation = 0.0;
  double boost = 0.0;
  for (std::size_t i = 0; i < trials; ++i) {
    const auto params = GeneralizedParams(Complex{0.0, rng.uniform(0.0, 2.0)},
                                          imaginary_vector(rng, 0.0, 1.0));
    const auto t = random_transform(rng, 0.0, 2.0);
    const double r = bc_condition_residual(params, t, zeta_for(params.c(), t));
    double& slot = t.kind() == TransformKind::rotation ? rotation : boost;
    slot = std::max(slot, r);
  }
  double weakest = kInf;
  for (std::size_t i = 0; i < trials; ++i) {
    const auto params = GeneralizedParams(Complex{0.0, rng.uniform(0.0, 2.0)},
                                          imaginary_vector(rng, 0.2, 1.0));
    const auto t = random_transform(rng, 0.5, 2.0);
    weakest = std::min(weakest, bc_condition_residual(params, t, PhaseFunction{}));
  }
  double standard = 0.0;
  for (std::size_t i = 0; i < trials; ++i) {
    const auto params = GeneralizedParams::standard(rng.uniform(0.0, 2.0));
    standard = std::max(standard,
                        bc_condition_residual(params, random_transform(rng, 0.0, 2.0), PhaseFunction{}));
  }
  return {
      upper_check("zeta_rotation_condition", rotation, 1e-10),
      upper_check("zeta_boost_condition", boost, 1e-10),
      upper_check("zeta_standard_needs_no_phase", standard, 1e-10),
      lower_check("zeta_zeroed_rejected", weakest, 0.05),
  };
}

std::vector<CheckResult> operator_suite(Rng& rng, std::size_t trials) {
  double hermitian = 0.0;
  double spectrum = 0.0;
  double degeneracy_gap = kInf;
  double kg = 0.0;
  double eigen = 0.0;
  double bispinor = 0.0;
  double ortho = 0.0;
  double kg_solution = 0.0;
  double gauge = 0.0;
  double round_trip = 0.0;
  double kg_off_branch = kInf;

  for (std::size_t i = 0; i < trials; ++i) {
    const auto params = random_params(rng);
    const Momentum k = random_momentum(rng, 2.0);
    const ComplexMatrix4 h = hamiltonian_matrix(k, params);
    hermitian = std::max(hermitian, max_abs(h - h.adjoint()));

    const Eigen::Vector4d ev = Eigen::SelfAdjointEigenSolver<ComplexMatrix4>(h).eigenvalues();
    const double plus = dispersion(k, params, Branch::positive);
    const double minus = dispersion(k, params, Branch::negative);
    const std::array<double, 4> expected{minus, minus, plus, plus};
    for (int a = 0; a < 4; ++a) {
      spectrum = std::max(spectrum, std::abs(ev(a) - expected[static_cast<std::size_t>(a)]));
    }
    degeneracy_gap = std::min(degeneracy_gap, ev(2) - ev(1));

    kg = std::max(kg, dirac_square_equals_kg(k, params));

    const auto solutions = plane_wave_solve(k, params);
    ComplexMatrix4 gram;
    for (std::size_t a = 0; a < 4; ++a) {
      const auto& s = solutions[a];
      eigen = std::max(eigen, eigen_residual(s, params));
      bispinor = std::max(bispinor, bispinor_residual(s, params));
      kg_solution = std::max(kg_solution, kg_residual(s.k, s.energy, s.spinor, params));
      for (std::size_t b = 0; b < 4; ++b) {
        gram(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) =
            s.spinor.dot(solutions[b].spinor);
      }
      const auto mapped = gauge_map_to_standard(s, params);
      gauge = std::max(gauge, eigen_residual(mapped, GeneralizedParams::standard(params.m0())));
      const auto back = gauge_map_from_standard(mapped, params);
      round_trip = std::max({round_trip, (back.k - s.k).cwiseAbs().maxCoeff(),
                             std::abs(back.energy - s.energy),
                             (back.spinor - s.spinor).cwiseAbs().maxCoeff()});
    }
    ortho = std::max(ortho, max_abs(gram - ComplexMatrix4::Identity()));

    Spinor u;
    for (int a = 0; a < 4; ++a) u(a) = random_complex(rng);
    u.normalize();
    const double top = std::max(plus * plus, minus * minus);
    kg_off_branch = std::min(
        kg_off_branch, kg_residual(k, std::sqrt(top + rng.uniform(0.5, 1.0)), u, params));
  }
  return {
      upper_check("hamiltonian_hermitian", hermitian, 1e-13),
      upper_check("dispersion_vs_eigensolver", spectrum, 1e-10),
      lower_check("dispersion_branch_gap", degeneracy_gap, 0.0),
      upper_check("dirac_square_equals_kg", kg, 1e-10),
      upper_check("plane_wave_eigen_residual", eigen, 1e-10),
      upper_check("plane_wave_bispinor_residual", bispinor, 1e-10),
      upper_check("plane_wave_orthonormality", ortho, 1e-10),
      upper_check("plane_wave_kg_residual", kg_solution, 1e-10),
      lower_check("kg_off_branch_rejected", kg_off_branch, 1e-3),
      upper_check("gauge_map_standard_residual", gauge, 1e-10),
      upper_check("gauge_map_round_trip", round_trip, 1e-12),
  };
}

std::vector<CheckResult> nonrel_suite(Rng& rng, std::size_t trials) {
  double ll_vs_pauli = 0.0;
  double ll_residual = 0.0;
  double dirac_vs_dispersion = 0.0;
  double standard = 0.0;
  for (std::size_t i = 0; i < trials; ++i) {
    NonRelParams p;
    p.m0 = rng.uniform(0.1, 5.0);
    p.eps_tilde = rng.uniform(-1.0, 1.0);
    p.c_tilde = random_momentum(rng, 1.0);
    const Momentum k = random_momentum(rng, 1.0);
    const auto ll = levy_leblond_solve(k, p);
    ll_vs_pauli = std::max(ll_vs_pauli, std::abs(ll.energy - pauli_energy(k, p)));
    ll_residual = std::max(ll_residual, levy_leblond_residual(k, p, ll));

    const auto g = GeneralizedParams::from_physical(p.m0, p.eps_tilde,
                                                    {p.c_tilde.x(), p.c_tilde.y(), p.c_tilde.z()});
    dirac_vs_dispersion =
        std::max(dirac_vs_dispersion, std::abs(dirac_energy(k, p, Branch::positive) -
                                               dispersion(k, g, Branch::positive)));

    NonRelParams s;
    s.m0 = p.m0;
    standard = std::max(standard, std::abs(pauli_energy(k, s) - k.squaredNorm() / (2.0 * s.m0)));
  }

  // Log-log slope of the absolute limit error.
  NonRelParams unit;
  constexpr int kPoints = 21;
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (int i = 0; i < kPoints; ++i) {
    const double k = std::pow(10.0, -3.0 + 2.0 * i / (kPoints - 1));
    const double x = std::log(k);
    const double y = std::log(std::abs(limit_difference({0.0, 0.0, k}, unit)));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double slope = (kPoints * sxy - sx * sy) / (kPoints * sxx - sx * sx);

  return {
      upper_check("levy_leblond_vs_pauli", ll_vs_pauli, 1e-13),
      upper_check("levy_leblond_residual", ll_residual, 1e-12),
      upper_check("nonrel_dirac_vs_dispersion", dirac_vs_dispersion, 1e-12),
      upper_check("nonrel_standard_reduction", standard, 0.0),
      upper_check("nonrel_error_slope", std::abs(slope - 4.0), 0.1),
  };
}

VerifyReport run_verify(const VerifyOptions& options) {
  VerifyReport report;
  report.options = options;
  Rng master(options.seed);

  auto append = [&report](std::vector<CheckResult> checks) {
    report.checks.insert(report.checks.end(), checks.begin(), checks.end());
  };
  {
    Rng rng(master.split());
    append(clifford_suite(rng, options.trials));
  }
  {
    Rng rng(master.split());
    append(covariance_suite(rng, options.trials));
  }
  {
    Rng rng(master.split());
    append(zeta_suite(rng, options.trials));
  }
  {
    const auto phi0 = verify_phi0_uniqueness(options.trials, master.split());
    append(phi0.checks);
    report.notes.push_back("phi0_solution_space_dim measured=" +
                           std::to_string(phi0.solution_space_dimension) +
                           " expected=" + std::to_string(phi0.expected_solution_space_dimension));
    report.notes.push_back("phi0_bc_commutant_dim_with_gamma5=" +
                           std::to_string(phi0.bc_commutant_dimension_unrestricted));
  }
  {
    Rng rng(master.split());
    append(operator_suite(rng, options.trials));
  }
  {
    Rng rng(master.split());
    append(nonrel_suite(rng, options.trials));
  }

  // Dimension counts and the slope fit are not roundoff residuals; --tol
  // leaves them alone.
  static const std::array<std::string_view, 3> kStructural{
      "phi0_solution_space_dim", "phi0_bc_commutant_dim", "nonrel_error_slope"};
  if (options.tol) {
    for (auto& c : report.checks) {
      const bool structural =
          std::find(kStructural.begin(), kStructural.end(), c.name) != kStructural.end();
      if (!c.lower_bound && !structural) c.threshold = *options.tol;
    }
  }
  return report;
}

void write_verify_report(std::ostream& os, const VerifyReport& report) {
  os << "# seed=" << report.options.seed << " trials=" << report.options.trials
     << " tol=" << (report.options.tol ? format_double(*report.options.tol) : "default") << '\n';
  write_checks(os, report.checks);
  for (const auto& note : report.notes) os << "# " << note << '\n';
}

}  // namespace gendirac::cli
