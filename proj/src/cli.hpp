#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fracspec::cli {

/// Runs one subcommand. args excludes the program name. Results go to `out`
/// (or the --output file) only on success; messages go to `err`.
/// Returns 0 on success, 1 on numerical failure, 2 on bad arguments.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fracspec::cli
