// Command-line front end. Kept in the library so tests can drive it in-process.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pdom::cli {

enum ExitCode : int {
  kOk = 0,
  kScanFailure = 1,
  kParseError = 2,
  kCapExceeded = 3,
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pdom::cli
