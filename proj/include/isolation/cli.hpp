#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace isolation {

/// Exit codes: 0 all checks passed, 1 exceptions or violations found, 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace isolation
