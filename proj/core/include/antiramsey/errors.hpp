#pragma once

#include <stdexcept>
#include <string>

namespace antiramsey {

// Invalid mathematical input: bad part sizes, q or r out of range, malformed
// selections, colorings or files.  CLI maps this to exit code 2.
class domain_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A configured cap or search budget was exceeded.  Results are never
// approximated; the caller must raise the cap instead.  CLI exit code 4.
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace antiramsey
