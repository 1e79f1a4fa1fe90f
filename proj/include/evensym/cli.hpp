#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace evensym {

// Dispatches one command line (without the program name) and writes the
// report to out, diagnostics to err. Returns 0 when every requested check
// passed, 1 when a check failed, 2 on unusable input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace evensym
