#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace driftstream {

/// Entry point of the command-line tool, callable in-process for tests.
/// `args` excludes the program name. Returns the exit code: 0 on success,
/// 1 on a configuration error, 2 on a runtime failure.
int run_command(std::vector<std::string> args, std::ostream& out, std::ostream& err);

/// Same, wired to std::cout / std::cerr.
int run_command(std::vector<std::string> args);

}  // namespace driftstream
