#pragma once

#include <ostream>

namespace qpd {

// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitInvalidInput = 1,
  kExitPropertyFailure = 2,
  kExitUsage = 3,
};

// Entry point of the qpdiag tool. Results go to `out` as JSON (DOT for
// `render`); diagnostics go to `err` only.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qpd
