#pragma once
// Command line front end, callable in-process for testing.

#include <iosfwd>
#include <string>
#include <vector>

namespace bcl {

// Exit codes: 0 success, 1 infeasible or NO, 2 usage, 3 input validation.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace bcl
