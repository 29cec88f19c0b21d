#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace delpezzo::cli {

enum ExitCode : int {
  kSuccess = 0,
  kNegative = 1,    // the mathematical answer is "no" (singular, hypotheses fail, ...)
  kInputError = 2,  // malformed input, off-surface seed, bound overflow
  kInternal = 3,    // an exact identity failed
};

/// Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace delpezzo::cli
