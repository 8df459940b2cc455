#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bmf {

// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitYes = 0,
  kExitNo = 1,
  kExitUnknown = 2,
  kExitInputError = 3,
  kExitResource = 4,
};

// Runs the command line `args` (args[0] is the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bmf
