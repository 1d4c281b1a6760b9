#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gqt::cli {

/// Runs the command line `args` (without the program name).
///
/// Reports go to `out` (or to --out FILE). Returns 0 on success, 1 on a
/// domain error (a JSON error object is written to `out`), 2 on a usage error
/// (message and synopsis on `err`).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gqt::cli
