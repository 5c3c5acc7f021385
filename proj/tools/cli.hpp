#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cantor::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kTolerance = 3,
  kUndetermined = 4,
};

/// Runs one command line (without the program name) and returns its exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cantor::cli
