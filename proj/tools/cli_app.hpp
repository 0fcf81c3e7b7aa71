#pragma once

#include <iosfwd>

namespace antiramsey::cli {

// Parses argv and executes one subcommand, writing everything to the given
// streams.  Returns the process exit code: 0 success, 1 usage error,
// 2 domain error, 3 verification failure, 4 resource limit.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace antiramsey::cli
