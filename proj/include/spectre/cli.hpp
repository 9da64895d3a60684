#pragma once

#include <string>
#include <vector>

namespace spectre::cli {

// Full command-line interface (align / generate / evaluate / sweep /
// centrality). `args` excludes the program name, natural order.
// Exit codes: 0 success, 1 runtime failure, 2 usage or I/O error.
int run(const std::vector<std::string>& args);
int run(int argc, const char* const* argv);

}  // namespace spectre::cli
