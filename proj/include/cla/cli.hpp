#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cla {

/// Runs the command-line front end. Returns the process exit code:
/// 0 all checks pass, 1 any FAIL, 2 input or usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace cla
