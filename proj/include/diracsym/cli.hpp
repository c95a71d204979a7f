#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace diracsym::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,     // bad flags, unreadable files, malformed certificates
  kMismatch = 2,  // a published claim disagrees with the engine
};

/// Runs one command line (without the program name). Human output and the
/// JSON certificate go to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace diracsym::cli
