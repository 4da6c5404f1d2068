#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chowlab {

/// Command-line front end.  Returns the process exit code:
///   0 success, 1 at least one verification failed, 2 malformed input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace chowlab
