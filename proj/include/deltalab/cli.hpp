#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace deltalab {

// Runs one CLI invocation (args without the program name) against the
// given streams. Exit codes: 0 ok, 1 check-mismatch, 2 usage or syntax
// error, 3 computation error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace deltalab
