#pragma once

#include <ostream>

namespace combx {

// Full command-line entry point, parameterized over streams so tests can run
// it in process. Returns the process exit status: 0 on success, 1 on
// computation errors or failed verification, 2 on usage errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace combx
