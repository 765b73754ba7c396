#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace endoforge::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kUsage = 2,  // command-line or group-spec syntax error
  kSemantic = 3,
  kCap = 4,
};

/// Runs the command line `args` (without the program name), writing the
/// report to `out` and diagnostics to `err`. Returns an ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace endoforge::cli
