#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace foldkit {

// Runs the command line given args without the program name. Exit codes:
// 0 success, 1 verification/suite failure, 2 parse error, 3 precondition
// violation, 4 range error.
int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace foldkit
