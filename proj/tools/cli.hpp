#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace walkdom {

/// Runs the command line tool. Arguments exclude the program name.
/// Exit codes: 0 success (check: member; verify: zero disagreements),
/// 1 check: non-member / verify: disagreements found, 2 usage or input error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace walkdom
