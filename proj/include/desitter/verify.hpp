#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace desitter {

struct CheckResult {
  std::string name;
  bool passed = false;
  double worst = 0.0;      // largest observed error (or offset) for the check
  double tolerance = 0.0;  // threshold the worst value was compared against
  std::string detail;
};

struct VerifyOptions {
  /// Added to Gamma^0_{01} of the closed-form table before it is compared.
  /// Test hook for fault injection; 0 in normal use.
  double christoffel_fault = 0.0;
};

/// Invariant suite over geometry, fluid, model and a flat-space Riemann run.
std::vector<CheckResult> run_verification(const VerifyOptions& options = {});

bool all_passed(const std::vector<CheckResult>& checks);
std::string format_report(const std::vector<CheckResult>& checks);
nlohmann::json report_json(const std::vector<CheckResult>& checks);

}  // namespace desitter
