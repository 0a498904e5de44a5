#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace twisted {

// The whole command-line tool behind a function so tests can drive it
// in-process. args excludes the program name. Exit codes: 0 success,
// 1 failed property check, 2 usage or capacity error, 3 bad element
// selector.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace twisted
