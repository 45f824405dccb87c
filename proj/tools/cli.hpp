#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nlflow::cli {

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics and the optional run report to `err`.
/// Exit status: 0 success, 1 usage/input/domain error, 2 verification mismatch.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nlflow::cli
