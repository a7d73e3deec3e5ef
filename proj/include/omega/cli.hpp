#ifndef OMEGA_CLI_HPP
#define OMEGA_CLI_HPP

#include <iostream>
#include <string>
#include <vector>

namespace omega {

// Exit codes: 0 success, 1 verification failure, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace omega

#endif
