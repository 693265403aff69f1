#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace gallai::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kInputError = 2,
  /// A verify run found a violated instance, or a hunt found a counterexample.
  kInteresting = 3,
};

/// Runs one command line. `args` excludes the program name.
int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace gallai::cli
