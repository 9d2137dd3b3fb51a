#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coherence::cli {

// Runs one invocation. Reports go to `out`, diagnostics to `err`.
// Exit codes: 0 success, 1 domain error (violated precondition), 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coherence::cli
