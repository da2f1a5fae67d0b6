#pragma once

#include <iosfwd>

namespace qmc {

// Entry point behind the qmc binary; returns the process exit code
// (0 success, 2 usage error, 3 numerical failure).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qmc
