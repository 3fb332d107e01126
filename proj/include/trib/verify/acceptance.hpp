#pragma once

// The release gate: one check per acceptance criterion, run in order, each
// reported as a single PASS/FAIL line.  Shared by the acceptance test binary
// and the CLI verify-all subcommand.

#include <iosfwd>
#include <string>
#include <vector>

namespace trib::verify {

struct CriterionResult {
  int index = 0;
  std::string label;
  bool pass = false;
  std::string detail;  // observed values, or the first failure / exception
  double seconds = 0;
};

// Runs all criteria in order (the scan result feeds the noncongenial control)
// and streams one line per criterion to `out` as it finishes.  Exceptions are
// caught and turned into failures; this never throws.
std::vector<CriterionResult> run_acceptance(std::ostream& out);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace trib::verify
