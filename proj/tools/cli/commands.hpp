#pragma once

#include <iosfwd>

namespace lensfill::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitUsage = 2,
  kExitBudget = 3,
};

// Parses argv and runs one subcommand, writing results to `out` and
// diagnostics to `err`.  Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lensfill::cli
