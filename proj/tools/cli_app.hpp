#ifndef REFINV_CLI_APP_HPP
#define REFINV_CLI_APP_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace refinv::cli {

/// Runs the command line given the arguments after argv[0].
/// Exit codes: 0 all requested checks pass, 1 input error, 2 check failure.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace refinv::cli

#endif
