// cli.hpp -- command-line front-end, in-process callable for tests
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace subshift {

/// Runs the command line given by args (program name excluded), writing
/// normal output to out and diagnostics to err.  Returns the process exit
/// code: 0 success, 1 computation error or failed verification, 2 invalid
/// input.
int cli_main(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace subshift
