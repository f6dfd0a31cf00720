#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace folb::cli {

enum ExitCode : int { kComputed = 0, kUsage = 1, kDataOrResource = 2 };

// Runs one command line (args excludes the program name). Results go to
// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace folb::cli
