#pragma once

#include <iosfwd>

namespace bcapprox::cli {

// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kInputError = 1,      // unreadable or malformed graph, I/O failure
  kUsageError = 2,      // bad flags or parameter values
  kTruncated = 3,       // time budget hit; results carry no guarantee
  kOracleTimeout = 4,   // exact oracle did not finish within budget
  kValidationFailed = 5,
};

// Runs one command line. Reports go to `out` (or to files given by --out),
// the resolved configuration and diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bcapprox::cli
