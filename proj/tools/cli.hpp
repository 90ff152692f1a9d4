#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tope::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kNotApplicable = 2, kUsage = 3 };

/// Runs one `tope` invocation. `args` excludes the program name; input
/// paths of "-" read from `in`.
int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace tope::cli
