#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace casimir::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kNumerical = 2,  // non-convergence, bracket failure or I/O error
  kValidationFailed = 3,
};

// hbar c in J m, for --unit-length.
inline constexpr double kHbarC = 3.16152677e-26;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace casimir::cli
