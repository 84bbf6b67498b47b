#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wzw {

// Runs one CLI invocation. args excludes the program name. Returns the exit
// status: 0 success, 1 rejected input or bad flags, 2 failed invariant.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wzw
