#pragma once

// The waring_lab command surface. Exit codes: 0 success, 1 usage or input
// error, 2 mathematical error (NotInSpan, NotSubCI, ...).

#include <ostream>
#include <string>
#include <vector>

namespace waring {

/// args excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace waring
