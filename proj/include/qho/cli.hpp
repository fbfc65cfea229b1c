#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qho {

/// Entry point behind the `qho` binary. args excludes argv[0].
/// Exit codes: 0 success, 1 usage/validation error, 2 runtime error.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cli_main(int argc, const char* const* argv);

}  // namespace qho
