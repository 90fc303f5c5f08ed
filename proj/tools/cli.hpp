#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace so3zi::cli {

// exit codes: 0 ok, 1 invalid input, 2 numerical failure
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace so3zi::cli
