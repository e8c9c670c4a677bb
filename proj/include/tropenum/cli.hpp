#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tropenum {

/// Exit codes shared by every command.
enum ExitCode : int {
  kExitOk = 0,
  kExitUserError = 1,
  kExitInconsistent = 2,
};

/// Runs the command line `args` (program name excluded), writing results to
/// `out` and diagnostics to `err`. Never throws.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tropenum
