#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace torus_git::cli {

/// Exit codes: 0 every machine check passed, 1 some machine check failed,
/// 2 invalid input. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace torus_git::cli
