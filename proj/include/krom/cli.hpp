#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace krom::cli {

/// Process exit codes.
enum ExitCode : int {
    success = 0,       // also "equivalent"
    not_equivalent = 1,
    usage_error = 2,   // bad flags, unreadable file, parse error
    internal_error = 3,
};

/// Runs the command line `args` (without the program name). A FILE of "-"
/// is read from `in`; results go to `out` and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace krom::cli
