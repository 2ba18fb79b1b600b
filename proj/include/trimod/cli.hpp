#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trimod {

// Runs one CLI command (args exclude the program name) writing results to
// `out` and diagnostics to `err`. Returns the process exit code:
// 0 success, 1 input error, 2 internal invariant violation.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trimod
