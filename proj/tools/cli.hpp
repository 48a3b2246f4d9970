#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mlgap::cli {

/// Runs the command line `args` (without the program name). Returns the exit
/// status: 0 when every verdict passes, 1 when one fails, 2 on bad input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mlgap::cli
