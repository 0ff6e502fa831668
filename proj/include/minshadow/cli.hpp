#pragma once

#include <ostream>

namespace minshadow {

/// Entry point of the command-line tool. Exit codes: 0 when every
/// verification passes, 1 when one fails, 2 on usage or input errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace minshadow
