#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace frame_lab {

enum ExitCode : int {
  kPass = 0,
  kCheckFailed = 1,
  kBadInput = 2,
  kCapacity = 3,
};

/// Runs one frame_lab invocation. `args` excludes the program name. Reports
/// go to `out`, diagnostics and usage text to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Name of the tolerance override variable.
inline constexpr const char* kToleranceEnv = "FRAME_LAB_TOL";

}  // namespace frame_lab
