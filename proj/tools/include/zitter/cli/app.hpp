#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zitter::cli {

enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailed = 1,
    kInvalidInput = 2,
    kIndeterminate = 3,
};

/// Runs one `zitter` invocation. `args` excludes the program name. JSON and
/// CSV results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace zitter::cli
