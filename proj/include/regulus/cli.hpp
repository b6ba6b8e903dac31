#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace regulus {

// Full command-line front end, callable in-process for tests. `args` holds
// the arguments without the program name. Returns the process exit code:
// 0 pass, 1 verified-false, 2 usage/validation error, 3 resource cap.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace regulus
