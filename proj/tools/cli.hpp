#pragma once

#include <iosfwd>

namespace mism::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kSuccess = 0,
  kEvaluationErrors = 1,
  kUsageError = 2,
};

/// Runs one `mism` invocation.  Reports go to `out`; diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mism::cli
