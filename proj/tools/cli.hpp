#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace succinct::cli {

/// Runs one command line (without the program name). Exit codes: 0 success, 1 input error,
/// 2 resource cap exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace succinct::cli
