#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tanglelab::cli {

// args excludes the program name. Reports go to out, diagnostics to err.
// Exit codes: 0 ok, 2 bad input, 3 budget exhausted, 4 cross-check failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tanglelab::cli
