#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace deltacvx::cli {

/// Runs one CLI invocation. `args` excludes the program name. Results go to
/// `out`, diagnostics to `err`; `in` backs the "-" input path.
///
/// Exit codes: 0 success, 1 domain error (bad input, unknown command,
/// capacity exceeded, failed verification), 2 usage error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace deltacvx::cli
