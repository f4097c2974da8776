#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eqsc {

// Runs the command line tool on the given arguments (without the program
// name), writing to the given streams. Returns the process exit code:
// 0 on success, 1 for usage and input problems, 2 when a computation
// invariant is violated or a check finds failures.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace eqsc
