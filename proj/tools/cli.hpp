#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fhr::cli {

/// Runs the command line (args excludes the program name). Results go to
/// `out` unless --out names a file; diagnostics go to `err` as one line.
/// Returns 0 on success, 2 for invalid parameters and 1 for I/O failures.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fhr::cli
