#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polycenter::cli {

// Runs the command line tool. args excludes the program name. Returns the
// process exit code: 0 success, 2 invalid input, 3 domain or geometric
// failure, 4 normalization failure, 5 non-convergence.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polycenter::cli
