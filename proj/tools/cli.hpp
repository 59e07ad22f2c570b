#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace markov::cli {

/// Exit codes, stable across releases:
///   0  success (including inconclusive certificates)
///   1  validation failure, parse failure, usage error
///   2  a required property is not certified, or a hypothesis-gated command
///      (sections) cannot run or construct its witness
///   3  internal error (unintended collision during expansion)
enum ExitCode : int {
  kOk = 0,
  kValidationFailure = 1,
  kHypothesisUnmet = 2,
  kInternalError = 3,
};

/// Runs one command line ("validate", "expand", "check", "sections").
/// argv excludes the program name.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace markov::cli
