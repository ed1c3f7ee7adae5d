#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace surfcx::cli {

enum ExitCode : int {
  kOk = 0,
  kInternalError = 1,  // a certificate failed verification
  kInvalidInput = 2,
};

/// Runs one invocation. `args` excludes the program name. Data goes to
/// `out`, diagnostics (one line) to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace surfcx::cli
