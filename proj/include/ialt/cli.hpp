#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ialt::cli {

// Dispatches one invocation of the command-line tool; args excludes the
// program name.  Returns the process exit code: 0 on success, nonzero with a
// message on err when a precondition is violated.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace ialt::cli
