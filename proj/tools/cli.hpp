#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mvlab::cli {

enum ExitCode : int { ok = 0, failed = 1, usage = 2, interval = 3 };

// Runs one mvlab invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace mvlab::cli
