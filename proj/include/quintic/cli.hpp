#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace quintic {

/// Runs one command line (args excludes the program name). Exit status:
/// 0 success, 1 invalid input, 2 internal assertion.
int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err);

}  // namespace quintic
