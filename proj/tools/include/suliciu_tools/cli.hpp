#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace suliciu::tools {

enum ExitCode : int {
  kExitOk = 0,
  kExitIo = 1,
  kExitConfig = 2,
  kExitUnsolved = 3,
  kExitSolver = 4,
  kExitThreshold = 5,
};

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name. JSON and CSV go to `out` (and to files under the output
/// directory); diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace suliciu::tools
