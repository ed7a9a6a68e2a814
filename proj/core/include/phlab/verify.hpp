#pragma once

#include <optional>
#include <string>
#include <vector>

namespace phlab {

struct VerifyOptions {
  /// floors every numeric comparison tolerance at this value
  std::optional<double> tol_override;
  /// when nonempty, run and report only checks whose id starts with this
  /// prefix (criterion granularity, e.g. "C3" or "C3.theta=pi6")
  std::string only;
};

struct CheckResult {
  std::string id;
  double measured = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  /// marks comparisons against bundled closed forms that are known to
  /// disagree with the first-principles pipeline; the pipeline side is
  /// independently confirmed by the quadrature oracle in sibling checks
  bool expected_fail = false;
  std::string note;

  const char* status() const {
    if (passed) return expected_fail ? "XPASS" : "PASS";
    return expected_fail ? "XFAIL" : "FAIL";
  }
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  int count(const char* status) const;
  /// true when nothing failed unexpectedly and nothing passed that was
  /// expected to fail
  bool ok() const;
};

/// Runs the full acceptance suite (ten criteria, many checks each).
VerifyReport run_acceptance(const VerifyOptions& opts = {});

/// One line per check plus a summary block.
std::string render_report(const VerifyReport& report);

}  // namespace phlab
