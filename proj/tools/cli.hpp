#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tc_atlas {

/// Runs the tc-atlas command line. Returns 0 on success, 1 on a domain error
/// or failed verification, 2 on a usage or parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tc_atlas
