#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fsplit {

// Entry point of the fsplit tool; args excludes the program name. Returns the
// process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fsplit
