#pragma once

#include <functional>
#include <string>
#include <vector>

namespace pellhopf {

struct VerifyOptions {
  /// Global cap on the exhaustive bounds; each check also carries its own
  /// bound and runs up to the smaller of the two.
  int max_grade = 8;
  /// Seed for the randomized convexity check; fixed default for reproducible
  /// reports.
  unsigned int seed = 1729;
  /// Worker threads for run_verify. Results do not depend on this.
  int jobs = 1;
};

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = true;
  long long cases = 0;
  /// Counterexample text on failure; occasionally a summary on success.
  std::string detail;
};

struct CheckDef {
  std::string suite;
  std::string name;
  std::function<CheckResult(const VerifyOptions&)> run;
};

/// Every check in fixed registry order, grouped by suite.
const std::vector<CheckDef>& all_checks();

/// Suite names in registry order (excluding the pseudo-suite "all").
std::vector<std::string> verify_suites();

/// Runs one suite ("all" runs everything). Checks may be fanned out across
/// opt.jobs workers; results come back in registry order either way. Throws
/// std::invalid_argument for an unknown suite name.
std::vector<CheckResult> run_verify(const std::string& suite, const VerifyOptions& opt);

/// Runs a single check by name; used by the acceptance harness.
CheckResult run_check(const std::string& name, const VerifyOptions& opt);

}  // namespace pellhopf
