#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coldgrav {

// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitInput = 2,       // parse or validation failure
  kExitCondensed = 3,   // physical regime outside the model (z >= 1)
  kExitNumerical = 4,   // quadrature or root finding failed
};

/// Runs the tool on argv-style arguments (args[0] is the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coldgrav
