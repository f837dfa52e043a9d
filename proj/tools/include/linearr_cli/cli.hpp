#pragma once

#include <iosfwd>

namespace linearr::cli {

enum ExitCode : int {
  ok = 0,
  violation = 1,
  usage_error = 2,
};

/// Runs the command line tool. Output goes to `out`, diagnostics to `err`.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace linearr::cli
