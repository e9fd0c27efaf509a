#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nbf {

// Command dispatch for the `nbf` tool. `args` excludes the program name,
// e.g. {"table", "--input", "counts.csv"}.
//
// Exit status: 0 on success, 2 on bad usage or invalid input (single-line
// diagnostic on `err`, nothing on `out`), 1 on internal errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace nbf
