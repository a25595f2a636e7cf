#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wfgcri {

// Dispatches the argument vector (without the program name). Results go to
// `out` or to --out files; structured errors go to `err` as one-line JSON.
// Returns 0 on success, 2 on usage/parse/io errors, 3 on numerical failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace wfgcri
