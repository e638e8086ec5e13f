#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vpl::cli {

/// Runs the command line `args` (program name excluded). Returns the exit
/// code: 0 success, 1 logical negative, 2 usage, parse or load error.
int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
        std::ostream &err);

} // namespace vpl::cli
