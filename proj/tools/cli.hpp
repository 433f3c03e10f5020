#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace urm::cli {

enum ExitCode : int {
  kOk = 0,
  kParseFailure = 1,
  kValidationFailure = 2,
  kInternalFailure = 3,
  kVerifiedFalse = 4,
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace urm::cli
