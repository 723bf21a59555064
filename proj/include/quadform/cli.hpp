#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace quadform::cli {

/// Exit codes: 0 success, 1 failed checks, 2 invalid input or library error.
enum ExitCode : int { kOk = 0, kCheckFailed = 1, kError = 2 };

/// Runs the command line `args` (without the program name). Results go to
/// `out` unless --out names a file; the resolved system is logged to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quadform::cli
