#pragma once

#include <iosfwd>

namespace cssplit::cli {

enum ExitCode : int {
  kOk = 0,
  kParseError = 2,
  kDomainError = 3,
  kVerificationFailure = 4,
};

/// Entry point of the `cssplit` tool. Results go to `out` (or to --output),
/// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace cssplit::cli
