#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nov {

// Runs the novikov-cli command line. Exit codes: 0 success, 1 hypothesis-class
// errors, 2 assertion-class errors, 3 input/format errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv);

} // namespace nov
