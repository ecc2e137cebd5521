#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace prescount {

// Command-line driver (subcommands: group, count, zeta, verify).
// Returns the process exit code: 0 success, 1 verification mismatch,
// 2 usage or instance error.  Output goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace prescount
