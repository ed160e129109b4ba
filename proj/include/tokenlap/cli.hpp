#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tokenlap {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitViolations = 1, kExitUsage = 2 };

/// Runs the `tokenlap` command line. `args` excludes the program name.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tokenlap
