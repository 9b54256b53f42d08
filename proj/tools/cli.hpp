#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mgood::cli {

// runs one verb; returns the process exit status (0 ok, 1 domain error or
// expectation contradiction, 2 usage)
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mgood::cli
