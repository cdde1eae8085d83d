#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace irts {

/// Entry point of the `irts` command line tool. `args` excludes the program
/// name. Returns the process exit status: 0 on success, 2 on bad input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace irts
