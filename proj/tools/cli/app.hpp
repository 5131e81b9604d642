#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chipfire::cli {

enum ExitCode : int {
  kSuccess = 0,
  kDomainNegative = 1,
  kParseError = 2,
  kCapExceeded = 3,
};

// Runs one CLI invocation. `args` excludes the program name. Reads the
// input document from `in` when the input path is "-".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace chipfire::cli
