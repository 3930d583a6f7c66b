#pragma once

#include <iosfwd>

namespace wordlab::cli {

/// Exit statuses of the `wordlab` tool.
enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kParse = 3,
  kGuard = 4,
};

/// Runs the command line with argv[0] as the program name.  Worker count
/// for experiments comes from WORDLAB_THREADS (0 or unset = automatic).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wordlab::cli
