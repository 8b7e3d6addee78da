#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace euler {

/// Runs the `euler` command line. `args` excludes the program name.
/// Returns 0 on success, 1 on domain errors and 2 on usage or parse errors.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace euler
