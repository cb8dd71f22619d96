#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gray16::cli {

// Dispatches a full argv (without the program name) to the library.
// Exit status: 0 success, 1 mathematical refutation verdict, 2 usage or
// input error. Output is deterministic for a fixed argv.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace gray16::cli
