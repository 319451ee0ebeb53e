#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace minstab {

// Runs the CLI in-process. Returns the exit status: 0 success, 1 domain
// failure (e.g. no surviving route), 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace minstab
