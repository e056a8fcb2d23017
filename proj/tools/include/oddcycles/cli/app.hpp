#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oddcycles::cli {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitUsage = 2,
  kExitBudget = 3,
};

/// Environment variable consulted for the worker count when --workers is
/// not given.
inline constexpr const char* kWorkersEnv = "ODDCYCLES_WORKERS";

/// Runs the tool with argv-style arguments (args[0] is the program name),
/// writing results to out and diagnostics to err. Returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oddcycles::cli
