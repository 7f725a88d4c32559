#pragma once

#include <iosfwd>

namespace zcfast {

/// Exit codes: 0 ok, 1 verification failure, 2 bad arguments.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zcfast
