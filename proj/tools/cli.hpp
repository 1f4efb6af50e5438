#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ratmc::cli {

enum ExitCode : int {
  kTrue = 0,
  kFalse = 1,
  kInputError = 2,
  kUnsupported = 3,
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ratmc::cli
