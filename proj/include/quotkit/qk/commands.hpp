// CLI command dispatch. run_cli returns the process exit code:
//   0 success, 2 parse error, 3 precondition violation, 4 resource cap hit.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace quotkit::qk {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quotkit::qk
