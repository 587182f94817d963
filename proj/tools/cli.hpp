#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dakc::cli {

// Exit codes of the `dakc` tool.
enum ExitCode : int {
  kExitYes = 0,
  kExitNo = 1,
  kExitUnsupported = 2,
  kExitInputError = 3,
  kExitUsage = 4,
  kExitContract = 5,
};

// Runs one command line (without the program name). Reports go to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dakc::cli
