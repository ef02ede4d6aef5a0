#ifndef RIORDAN_CLI_HPP
#define RIORDAN_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace riordan::cli {

// Exit codes: 0 success, 1 usage or expression parse error, 2 domain error
// (non-invertible series, degenerate parameters, ...), 3 a requested check
// failed (e.g. check-involution on a non-involution).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace riordan::cli

#endif // RIORDAN_CLI_HPP
