#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace drazin_lab::cli {

/// Runs one CLI invocation (args excludes the program name). Reports go to
/// `out` (or the -o file), diagnostics to `err`. Returns the exit code:
/// 0 all pass, 1 any fail, 2 usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace drazin_lab::cli
