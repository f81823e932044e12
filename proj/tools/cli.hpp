#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bratteli::cli {

enum ExitCode : int {
  kSuccess = 0,
  kMismatch = 1,
  kUsageError = 2,
};

struct Environment {
  /// Output stream is a terminal; pretty tables may use color unless
  /// NO_COLOR is set.
  bool terminal = false;
  /// Value of NO_COLOR was present in the environment.
  bool no_color = false;
};

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Environment& env = {});

}  // namespace bratteli::cli
