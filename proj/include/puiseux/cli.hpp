#ifndef PUISEUX_CLI_HPP
#define PUISEUX_CLI_HPP

#include <iosfwd>

namespace puiseux {

// Command dispatch for the puiseux binary. Exit code 0 on success, 1 on input
// errors (parse failures, precondition violations), 2 on internal invariant
// failures.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace puiseux

#endif
