#pragma once

// Regression suite of reference values: every check is numbered, runs at a
// fixed tolerance and reports one line.

#include <iosfwd>
#include <string>
#include <vector>

namespace casimir::validation {

struct CheckResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
};

inline constexpr int kCheckCount = 12;

// Runs check `id` (1..kCheckCount). Exceptions inside a check become a failure.
CheckResult run_check(int id, unsigned jobs = 1);
std::vector<CheckResult> run_all(unsigned jobs = 1);

// "[PASS] 3 silicon point: ..." lines followed by a summary.
void print(std::ostream& os, const std::vector<CheckResult>& results);
bool all_passed(const std::vector<CheckResult>& results);

}  // namespace casimir::validation
