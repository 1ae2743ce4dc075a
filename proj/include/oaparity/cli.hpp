#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oaparity::cli {

/// Runs one command line (without the program name). Returns 0 on success,
/// 1 when the input data is invalid or a budget is exhausted, 2 on usage
/// errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oaparity::cli
