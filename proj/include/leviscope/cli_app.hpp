#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace leviscope {

/// Runs one CLI invocation. Exit codes: 0 success, 1 negative mathematical
/// verdict (not Levi-flat, no classification match, ...), 2 input error.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace leviscope
