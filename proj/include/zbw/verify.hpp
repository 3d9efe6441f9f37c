#pragma once

#include <map>
#include <string>
#include <vector>

namespace zbw {

/// One closed-form-vs-oracle or identity check. `claim` states the formula or
/// property under test; `relative` selects the tolerance semantics.
/// Informational entries are reported but never fail the suite.
struct VerifyCheck {
  std::string module;
  std::string name;
  std::string claim;
  double expected = 0.0;
  double actual = 0.0;
  double tolerance = 0.0;
  bool relative = false;
  bool informational = false;
  bool pass = true;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  std::map<std::string, std::string> metadata;

  bool all_passed() const;
  int failures() const;
};

/// Runs the oracle suite for one module (or "all"). Unknown module names
/// throw std::invalid_argument.
VerifyReport run_verify(const std::string& module = "all");

/// Machine-readable report with stable key order.
std::string verify_report_json(const VerifyReport& report);

/// One fixed-width console line per check.
std::string verify_report_text(const VerifyReport& report);

}  // namespace zbw
