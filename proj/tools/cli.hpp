#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace g2adm::cli {

/// Stable exit codes.
enum ExitCode : int {
  kOk = 0,
  kParseError = 2,
  kWrongGenus = 3,
  kInconsistent = 4,
  kDegenerateThetaNull = 5,
  kQuadratureUnstable = 6,
  kVerifyMismatch = 7,
};

/// Environment variable consulted for the default theta tolerance.
inline constexpr const char* kThetaTolEnv = "G2ADM_THETA_TOL";

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace g2adm::cli
