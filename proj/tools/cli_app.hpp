#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace interfero::cli {

inline constexpr const char* kToolVersion = "interfero 0.1.0";

enum ExitCode : int {
  kSuccess = 0,
  kParseError = 2,
  kDomainError = 3,
  kInvariantFailure = 4,
};

/// Runs the command line `args` (args[0] is the program name). Reports go to
/// `out` (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace interfero::cli
