#pragma once

// gendirac command-line front end. Exit status: 0 success, 1 a check
// failed, 2 usage or input error.

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>

#include "gendirac/clifford.hpp"

namespace gendirac::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Rejected flag values; reported with exit status 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct DispersionConfig {
  double m0 = 1.0;
  double eps_tilde = 0.0;
  double p_tilde = 0.0;
  double k_min = -1.0;
  double k_max = 1.0;
  std::size_t steps = 21;
  double c_light = 1.0;

  void validate() const;
};

struct EvolveConfig {
  std::size_t n = 1024;
  double length = 400.0;
  double dt = 0.1;
  std::size_t steps = 1000;
  double k0 = 0.0;
  double width = 20.0;
  double m0 = 1.0;
  double eps_tilde = 0.0;
  double p_tilde = 0.0;
  std::size_t sample_every = 100;
  double x0 = 0.0;

  void validate() const;
};

struct LimitConfig {
  double m0 = 1.0;
  double k_max = 0.1;
  std::size_t points = 21;
  double c_light = 1.0;

  void validate() const;
};

/// CSV `k,eps_plus,eps_minus,eps_pauli,eps_ll`; momenta along z, the
/// non-relativistic columns without the rest energy.
void run_dispersion(const DispersionConfig& config, std::ostream& out);

/// Trajectory CSV `t,norm,mean_x,spread,mean_k`.
void run_evolve(const EvolveConfig& config, std::ostream& out);

/// CSV `k,eps_dirac_kinetic,eps_pauli,abs_error,rel_error` over log-spaced
/// k in [k_max/100, k_max] with eps_tilde = p_tilde = 0.
void run_limit(const LimitConfig& config, std::ostream& out);

/// One `name=re+imi` line per basis coefficient, then `hermitian=true|false`.
void run_decompose(const ComplexMatrix4& m, std::ostream& out);

/// `re+imi` / `re-imi` with %.17g parts.
std::string format_complex(Complex z);

/// Parses argv and dispatches. Never throws.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gendirac::cli
