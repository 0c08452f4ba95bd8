#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <memory>
#include <numbers>
#include <optional>

#include <CLI11.hpp>

#include "gendirac/evolution.hpp"
#include "gendirac/invariance.hpp"
#include "gendirac/nonrel.hpp"
#include "gendirac/operators.hpp"
#include "gendirac/report.hpp"
#include "matrix_io.hpp"
#include "suites.hpp"

namespace gendirac::cli {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

bool finite(std::initializer_list<double> values) {
  for (double v : values) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

}  // namespace

void DispersionConfig::validate() const {
  require(finite({m0, eps_tilde, p_tilde, k_min, k_max, c_light}), "dispersion flags must be finite");
  require(m0 > 0.0, "--m0 must be positive");
  require(c_light > 0.0, "--c-light must be positive");
  require(k_max >= k_min, "--k-max must not be below --k-min");
  require(steps >= 1, "--steps must be at least 1");
}

void EvolveConfig::validate() const {
  require(finite({length, dt, k0, width, m0, eps_tilde, p_tilde, x0}), "evolve flags must be finite");
  require(n >= 64 && (n & (n - 1)) == 0, "--n must be a power of two >= 64");
  require(length > 0.0, "--length must be positive");
  require(dt > 0.0, "--dt must be positive");
  require(m0 >= 0.0, "--m0 must be non-negative");
  require(sample_every >= 1, "--sample-every must be at least 1");
  const double dx = length / static_cast<double>(n);
  require(width >= 5.0 * dx, "--width must be at least 5 grid cells");
  require(std::abs(k0) + 3.0 / width < std::numbers::pi * static_cast<double>(n) / length,
          "--k0 plus the packet's momentum spread exceeds the grid Nyquist momentum");
}

void LimitConfig::validate() const {
  require(finite({m0, k_max, c_light}), "limit flags must be finite");
  require(m0 > 0.0, "--m0 must be positive");
  require(c_light > 0.0, "--c-light must be positive");
  require(k_max > 0.0 && k_max < m0 * c_light, "--k-max must lie in (0, m0 c)");
  require(points >= 2, "--points must be at least 2");
}

void run_dispersion(const DispersionConfig& config, std::ostream& out) {
  config.validate();
  NonRelParams nr;
  nr.m0 = config.m0;
  nr.eps_tilde = config.eps_tilde;
  nr.c_tilde = {0.0, 0.0, config.p_tilde};
  nr.c_light = config.c_light;
  out << "k,eps_plus,eps_minus,eps_pauli,eps_ll\n";
  for (std::size_t i = 0; i < config.steps; ++i) {
    const double k = config.steps == 1
                         ? config.k_min
                         : config.k_min + (config.k_max - config.k_min) * static_cast<double>(i) /
                                              static_cast<double>(config.steps - 1);
    const Momentum kv{0.0, 0.0, k};
    out << format_double(k) << ',' << format_double(dirac_energy(kv, nr, Branch::positive)) << ','
        << format_double(dirac_energy(kv, nr, Branch::negative)) << ','
        << format_double(pauli_energy(kv, nr)) << ','
        << format_double(levy_leblond_solve(kv, nr).energy) << '\n';
  }
}

void run_evolve(const EvolveConfig& config, std::ostream& out) {
  config.validate();
  const auto params =
      GeneralizedParams::from_physical(config.m0, config.eps_tilde, {0.0, 0.0, config.p_tilde});
  GaussianSpec spec;
  spec.n = config.n;
  spec.length = config.length;
  spec.x0 = config.x0;
  spec.k0 = config.k0;
  spec.width = config.width;
  WavePacket packet = init_gaussian(spec, params);
  write_trajectory_csv(out, run_trajectory(packet, params, config.dt, config.steps,
                                           config.sample_every));
}

void run_limit(const LimitConfig& config, std::ostream& out) {
  config.validate();
  NonRelParams nr;
  nr.m0 = config.m0;
  nr.c_light = config.c_light;
  out << "k,eps_dirac_kinetic,eps_pauli,abs_error,rel_error\n";
  for (std::size_t i = 0; i < config.points; ++i) {
    const double exponent =
        -2.0 + 2.0 * static_cast<double>(i) / static_cast<double>(config.points - 1);
    const double k = config.k_max * std::pow(10.0, exponent);
    const Momentum kv{0.0, 0.0, k};
    out << format_double(k) << ',' << format_double(dirac_kinetic_energy(kv, nr)) << ','
        << format_double(pauli_energy(kv, nr)) << ','
        << format_double(std::abs(limit_difference(kv, nr))) << ','
        << format_double(nonrel_error(kv, nr).value) << '\n';
  }
}

std::string format_complex(Complex z) {
  const double im = z.imag();
  return format_double(z.real()) + (im < 0.0 ? "-" : "+") + format_double(std::abs(im)) + "i";
}

void run_decompose(const ComplexMatrix4& m, std::ostream& out) {
  const auto coeff = basis_decompose(m);
  static constexpr std::array<const char*, 6> kSigmaNames{"b01", "b02", "b03",
                                                          "b12", "b13", "b23"};
  out << "a=" << format_complex(coeff.a) << '\n';
  for (std::size_t i = 0; i < 6; ++i) out << kSigmaNames[i] << '=' << format_complex(coeff.b[i]) << '\n';
  for (std::size_t mu = 0; mu < 4; ++mu) out << 'c' << mu << '=' << format_complex(coeff.c[mu]) << '\n';
  for (std::size_t mu = 0; mu < 4; ++mu) out << 'd' << mu << '=' << format_complex(coeff.d[mu]) << '\n';
  out << "e5=" << format_complex(coeff.e5) << '\n';
  out << "hermitian=" << (coeff.hermitian(kAlgebraTolerance) ? "true" : "false") << '\n';
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical checks for the generalized Dirac equation", "gendirac"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string output_path;
  app.add_option("--output,-o", output_path, "Write results to this file instead of stdout");

  VerifyOptions verify;
  std::optional<double> verify_tol;
  auto* verify_cmd = app.add_subcommand("verify", "Run every invariance and operator check");
  verify_cmd->add_option("--trials", verify.trials, "Random draws per suite")
      ->check(CLI::Range(std::size_t{1}, std::size_t{1000000}));
  verify_cmd->add_option("--seed", verify.seed, "Master seed");
  verify_cmd->add_option("--tol", verify_tol, "Threshold for every roundoff check")
      ->check(CLI::PositiveNumber);

  DispersionConfig dispersion_cfg;
  auto* dispersion_cmd = app.add_subcommand("dispersion", "Tabulate dispersion branches along z");
  dispersion_cmd->add_option("--m0", dispersion_cfg.m0, "Rest mass")->required();
  dispersion_cmd->add_option("--eps-tilde", dispersion_cfg.eps_tilde, "Energy shift")->required();
  dispersion_cmd->add_option("--p-tilde", dispersion_cfg.p_tilde, "Momentum shift along z")->required();
  dispersion_cmd->add_option("--k-min", dispersion_cfg.k_min, "First grid momentum")->required();
  dispersion_cmd->add_option("--k-max", dispersion_cfg.k_max, "Largest momentum")->required();
  dispersion_cmd->add_option("--steps", dispersion_cfg.steps, "Rows in the table")->required();
  dispersion_cmd->add_option("--c-light", dispersion_cfg.c_light, "Speed of light (default 1)");

  EvolveConfig evolve_cfg;
  auto* evolve_cmd = app.add_subcommand("evolve", "Evolve a Gaussian packet and emit observables");
  evolve_cmd->add_option("--n", evolve_cfg.n, "Grid points (power of two, >= 64)")->required();
  evolve_cmd->add_option("--length", evolve_cfg.length, "Box length")->required();
  evolve_cmd->add_option("--dt", evolve_cfg.dt, "Time step")->required();
  evolve_cmd->add_option("--steps", evolve_cfg.steps, "Number of time steps")->required();
  evolve_cmd->add_option("--k0", evolve_cfg.k0, "Carrier momentum")->required();
  evolve_cmd->add_option("--width", evolve_cfg.width, "Gaussian width")->required();
  evolve_cmd->add_option("--m0", evolve_cfg.m0, "Rest mass")->required();
  evolve_cmd->add_option("--eps-tilde", evolve_cfg.eps_tilde, "Energy shift")->required();
  evolve_cmd->add_option("--p-tilde", evolve_cfg.p_tilde, "Momentum shift along z")->required();
  evolve_cmd->add_option("--sample-every", evolve_cfg.sample_every,
                         "Steps between CSV rows (default 100)");
  evolve_cmd->add_option("--x0", evolve_cfg.x0, "Initial centre (default 0)");

  LimitConfig limit_cfg;
  auto* limit_cmd = app.add_subcommand("limit", "Compare Dirac and Pauli energies at small k");
  limit_cmd->add_option("--m0", limit_cfg.m0, "Rest mass")->required();
  limit_cmd->add_option("--k-max", limit_cfg.k_max, "Largest momentum")->required();
  limit_cmd->add_option("--points", limit_cfg.points, "Log-spaced samples in [k_max/100, k_max]")
      ->required();
  limit_cmd->add_option("--c-light", limit_cfg.c_light, "Speed of light (default 1)");

  std::string input_path;
  auto* decompose_cmd = app.add_subcommand("decompose", "Expand a 4x4 matrix in the Clifford basis");
  decompose_cmd->add_option("--input", input_path, "Matrix file (4 rows of 8 numbers)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "gendirac: " << e.what() << '\n';
    if (e.get_exit_code() != 0) err << "Run with --help for usage.\n";
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    // Validate everything and load inputs before touching the output.
    ComplexMatrix4 matrix;
    if (*dispersion_cmd) dispersion_cfg.validate();
    if (*evolve_cmd) evolve_cfg.validate();
    if (*limit_cmd) limit_cfg.validate();
    if (*decompose_cmd) matrix = parse_matrix_file(input_path);
    verify.tol = verify_tol;

    std::ofstream file;
    if (!output_path.empty()) {
      file.open(output_path);
      if (!file) throw UsageError("cannot open output file " + output_path);
    }
    std::ostream& sink = output_path.empty() ? out : file;

    int status = kExitOk;
    if (*verify_cmd) {
      const auto report = run_verify(verify);
      write_verify_report(sink, report);
      status = report.passed() ? kExitOk : kExitCheckFailed;
    } else if (*dispersion_cmd) {
      run_dispersion(dispersion_cfg, sink);
    } else if (*evolve_cmd) {
      run_evolve(evolve_cfg, sink);
    } else if (*limit_cmd) {
      run_limit(limit_cfg, sink);
    } else {
      run_decompose(matrix, sink);
    }
    sink.flush();
    if (!sink) {
      err << "gendirac: failed writing output\n";
      return kExitCheckFailed;
    }
    return status;
  } catch (const MatrixFileError& e) {
    err << "gendirac: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "gendirac: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "gendirac: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "gendirac: " << e.what() << '\n';
    return kExitCheckFailed;
  }
}

}  // namespace gendirac::cli
