#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lcdkit::cli {

enum ExitCode { ok = 0, mismatch = 1, parameter_error = 2, data_unavailable = 3 };

/// Runs one lcdkit command line. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lcdkit::cli
