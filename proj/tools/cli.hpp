#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace beanbag::cli {

inline constexpr std::string_view kVersion = "0.1.0";

// Runs the command line given by args (without the program name),
// writing results to `out` and diagnostics to `err`.  Returns the
// process exit code: 0 on success, nonzero with a single-line
// diagnostic on any argument or I/O error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace beanbag::cli
