#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace tatebc {

/// Exit codes: 0 all checks pass, 1 a check failed, 2 malformed input or usage.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tatebc
