#pragma once

// Verification suites run by `gendirac verify`. Every suite draws from its
// own sub-stream of the master seed, so adding a check to one suite does not
// shift the samples of another.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "gendirac/random.hpp"
#include "gendirac/report.hpp"

namespace gendirac::cli {

struct VerifyOptions {
  std::size_t trials = 200;
  std::uint64_t seed = 42;
  /// Replaces the default threshold of every positive roundoff check.
  std::optional<double> tol;
};

struct VerifyReport {
  VerifyOptions options;
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;

  bool passed() const { return all_passed(checks); }
};

std::vector<CheckResult> clifford_suite(Rng& rng, std::size_t trials);
std::vector<CheckResult> covariance_suite(Rng& rng, std::size_t trials);
std::vector<CheckResult> zeta_suite(Rng& rng, std::size_t trials);
std::vector<CheckResult> operator_suite(Rng& rng, std::size_t trials);
std::vector<CheckResult> nonrel_suite(Rng& rng, std::size_t trials);

VerifyReport run_verify(const VerifyOptions& options);

/// `# seed=<s> trials=<n> tol=<t|default>`, the CHECK lines, then `# ` notes.
void write_verify_report(std::ostream& os, const VerifyReport& report);

}  // namespace gendirac::cli
