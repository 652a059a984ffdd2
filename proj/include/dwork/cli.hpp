#pragma once

#include <ostream>

namespace dwork {

enum ExitCode : int {
  kExitOk = 0,
  kExitFalse = 1,        // a verification came out false
  kExitUsage = 2,        // bad flags, invalid family, domain errors
  kExitResourceCap = 3,  // oracle block too large
  kExitUnsupported = 4,  // degenerate or logarithmic case
};

// Runs one command line (argv[0] is the program name) and returns the exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dwork
