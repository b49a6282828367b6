#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace burchlab {

/// Exit codes of the command line front-end.
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitMath = 2, kExitCap = 3 };

/// Runs `burchlab <args>` (args excludes the program name) writing reports to
/// out and diagnostics to err. Reads BURCHLAB_CAP from the environment.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace burchlab
