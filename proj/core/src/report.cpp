#include "gendirac/report.hpp"

#include <algorithm>
#include <cstdio>

namespace gendirac {

CheckResult upper_check(std::string name, double value, double threshold) {
  return CheckResult{std::move(name), value, threshold, false};
}

CheckResult lower_check(std::string name, double value, double threshold) {
  return CheckResult{std::move(name), value, threshold, true};
}

std::string format_double(double value) {
  if (value == 0.0) return "0";  // folds -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string format_check_line(const CheckResult& check) {
  return "CHECK " + check.name + " max_residual=" + format_double(check.max_residual) +
         (check.pass() ? " PASS" : " FAIL");
}

void write_checks(std::ostream& os, const std::vector<CheckResult>& checks) {
  for (const auto& check : checks) os << format_check_line(check) << '\n';
}

bool all_passed(const std::vector<CheckResult>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass(); });
}

}  // namespace gendirac
