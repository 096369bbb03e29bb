#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace forest::cli {

/// Runs one command line (args[0] is the program name). Returns 0 on
/// success, 1 on a computation error, 2 on a usage error. Diagnostics go to
/// `err`, results to `out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace forest::cli
