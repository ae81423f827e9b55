#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cjones::cli {

/// Runs one cjones command. `args` excludes the program name.
/// Returns 0 on success, 2 on usage errors and 1 on computation errors
/// (with a one-line diagnostic on `err`).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cjones::cli
