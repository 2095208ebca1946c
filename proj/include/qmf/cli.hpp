#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qmf::cli {

// Runs one CLI invocation. Exit codes: 0 success, 1 verification failure or
// insufficient precision, 2 usage or input error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace qmf::cli
