#pragma once

#include <ostream>

namespace ringlab {

/// Exit codes: 0 success, 1 counterexample found, 2 usage or construction error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ringlab
