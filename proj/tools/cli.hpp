#pragma once

#include <iosfwd>

namespace capelli::cli {

// Entry point shared by the binary and the tests.  Exit codes: 0 on
// success, 1 on verification failure, 2 on usage errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace capelli::cli
