#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace warmgray::cli {

/// Process exit codes; stable for scripting.
enum ExitCode : int {
  exit_ok = 0,
  exit_usage = 1,
  exit_io = 2,
  exit_compute = 3,
};

/// Runs the command line (without the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace warmgray::cli
