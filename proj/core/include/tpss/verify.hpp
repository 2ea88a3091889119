#pragma once

// Cross-route consistency checks: every closed form is compared against an
// independent computation at a fixed tolerance.

#include <string>
#include <vector>

namespace tpss {

struct CheckResult {
  std::string name;
  bool passed;
  double max_error;
  double tolerance;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  [[nodiscard]] bool all_passed() const;
};

struct VerifyOptions {
  /// Multiplies every tolerance. 1 is the production setting; 0 turns every
  /// inexact comparison into a failure (negative control).
  double tolerance_scale = 1.0;
};

[[nodiscard]] VerificationReport run_verification(const VerifyOptions& options = {});

[[nodiscard]] std::string report_text(const VerificationReport& report);
[[nodiscard]] std::string report_json(const VerificationReport& report);

}  // namespace tpss
