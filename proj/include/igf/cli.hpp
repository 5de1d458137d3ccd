#pragma once

#include <iosfwd>

namespace igf::cli {

enum ExitCode : int {
  kSuccess = 0,
  kValidationFailure = 2,
  kDomainFailure = 3,
  kVerificationFailure = 4,
};

/// Runs the `igf` command line. Results go to `out`, diagnostics to `err`;
/// the return value is the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace igf::cli
