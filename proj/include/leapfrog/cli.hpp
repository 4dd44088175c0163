#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace leapfrog {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitInvalidInput = 2,
  kExitVerificationFailed = 3,
  kExitResourceLimit = 4,
};

/// Runs the command line `args` (without the program name). Results go to
/// `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cli_main(int argc, char** argv);

}  // namespace leapfrog
