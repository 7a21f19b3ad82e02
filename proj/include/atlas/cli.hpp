#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace atlas {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2, kExitGuard = 3 };

/// Runs the command-line tool on `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace atlas
