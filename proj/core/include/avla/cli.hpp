#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace avla {

/// Process exit codes of the command-line front end.
enum ExitCode : int {
  kExitPass = 0,
  kExitFail = 1,
  kExitInvalidInput = 2,
  kExitComplexInvalid = 3,
};

/// Runs one command. `args` excludes the program name, e.g.
/// {"validate", "ex2_2.json", "--convention", "right"}. Reports go to `out`,
/// diagnostics to `err`; the return value is an ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace avla
