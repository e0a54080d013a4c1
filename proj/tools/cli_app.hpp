#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nlgames::cli {

// Exit codes: 0 success, 2 usage error, 3 domain/validation error,
// 4 optimizer non-convergence.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nlgames::cli
