#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pa {

/// Runs the command line tool in-process. `args` excludes the program name.
/// Exit codes: 0 success, 1 invalid input, 2 invariant/verification failure,
/// 3 budget exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pa
