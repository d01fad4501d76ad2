#pragma once

#include <iosfwd>

namespace bentkit::cli {

/// Process exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,      // bad flags, unsupported n, violated preconditions
  kFormatError = 2,     // unreadable or malformed input
  kCounterexample = 3,  // a verification found a counterexample
};

/// Runs the `bentkit` command line. Reports go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bentkit::cli
