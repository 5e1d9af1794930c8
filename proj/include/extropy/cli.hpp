#pragma once

#include <ostream>

namespace extropy::cli {

enum ExitCode : int {
  kOk = 0,
  kIoError = 1,
  kParseError = 2,
  kUnsupported = 3,
  kPropertyFailure = 4,
};

// Entry point of the `extropy` tool; writes reports to `out` and diagnostics
// to `err` and returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace extropy::cli
