#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace crystalfold::cli {

/// Runs one CLI invocation; args excludes the program name. Returns the exit
/// status: 0 success, 1 verification failure, 2 rejected input or I/O error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace crystalfold::cli
