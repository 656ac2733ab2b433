#ifndef WINCX_CLI_HPP
#define WINCX_CLI_HPP

#include <iosfwd>

namespace wincx {

// Command-line driver shared by the standalone binary and the in-process
// tests.  Returns the process exit status: 0 when the requested computation
// or checks succeed, 1 when a requested check fails, 2 on usage or input
// errors, 3 when a search budget is exhausted (a partial report is still
// emitted).  Structured output goes to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wincx

#endif
