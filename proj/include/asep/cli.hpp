#ifndef ASEP_CLI_HPP
#define ASEP_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace asep {

// Runs one CLI invocation (args without the program name) against the given
// streams.  Exit codes: 0 success/pass, 1 verification failure, 2 usage
// error.  Identical invocations produce byte-identical output.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace asep

#endif
