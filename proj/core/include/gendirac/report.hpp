#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gendirac {

/// One named numerical check. `lower_bound` checks pass when the measured
/// value exceeds the threshold (negative controls); the others pass when it
/// does not exceed it.
struct CheckResult {
  std::string name;
  double max_residual = 0.0;
  double threshold = 0.0;
  bool lower_bound = false;

  bool pass() const {
    return lower_bound ? max_residual > threshold : max_residual <= threshold;
  }
};

CheckResult upper_check(std::string name, double value, double threshold);
CheckResult lower_check(std::string name, double value, double threshold);

/// `CHECK <name> max_residual=<float> PASS|FAIL`, float in %.17g.
std::string format_check_line(const CheckResult& check);

/// Shortest-of-%.17g rendering used across reports and CSV output.
std::string format_double(double value);

void write_checks(std::ostream& os, const std::vector<CheckResult>& checks);

bool all_passed(const std::vector<CheckResult>& checks);

}  // namespace gendirac
