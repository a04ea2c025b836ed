#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace htspec {

/// Runs the command line (args excludes the program name) and returns the
/// process exit code: 0 ok, 1 usage, 2 domain error, 3 numeric failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace htspec
