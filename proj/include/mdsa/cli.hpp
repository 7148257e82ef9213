#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mdsa {

// Runs one CLI invocation. argv excludes the program name.
// Exit codes: 0 success / all checks pass, 1 verification failure,
// 2 usage, parse, or evaluation error.
int run_command(const std::vector<std::string>& argv, std::ostream& out,
                std::ostream& err);

} // namespace mdsa
