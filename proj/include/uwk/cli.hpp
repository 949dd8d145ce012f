#pragma once

// Command-line entry point, exposed as a library function so the test suite
// can drive it in-process.  Exit codes: 0 success, 1 internal error,
// 2 precondition failure.

#include <iosfwd>
#include <string>
#include <vector>

namespace uwk::cli {

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace uwk::cli
