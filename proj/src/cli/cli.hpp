#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace diamaug::cli {

/// Runs the command line `args` (program name excluded). Returns the process
/// exit code: 0 yes/valid, 1 no/infeasible/invalid, 2 usage, parse or
/// budget errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace diamaug::cli
