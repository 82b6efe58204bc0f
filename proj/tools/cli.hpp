#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pathweyl::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParseError = 2,
  kPrecondition = 3,
  kBudgetExceeded = 4,
  kOracleMismatch = 5,
};

/// Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pathweyl::cli
