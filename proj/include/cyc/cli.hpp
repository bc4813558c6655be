#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cyc::cli {

// Runs the command-line tool in-process. `args` excludes the program name.
// Exit codes: 0 success, 1 verification/validation failure, 2 usage or data
// error. Output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cyc::cli
