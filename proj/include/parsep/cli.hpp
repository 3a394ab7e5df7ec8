#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace parsep::cli {

enum ExitCode : int {
    kPass = 0,
    kVerificationFailure = 1,
    kUsageError = 2,
    kNotInClass = 3,
    kOverflow = 4,
};

// Runs one command line. `args` excludes the program name. Normal output goes
// to `out`, diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace parsep::cli
