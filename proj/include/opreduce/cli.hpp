#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace opreduce {

/// Runs the command line tool on the given arguments (program name not
/// included). Returns the process exit code: 0 on success, 1 when a
/// verification ran and found a nonzero residual, 2 on bad input or bad
/// usage, 3 on an internal consistency failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace opreduce
