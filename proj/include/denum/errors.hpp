#pragma once

#include <stdexcept>

namespace denum {

/// Bad arguments from the caller. The CLI maps this to exit code 2.
class invalid_input : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A broken internal invariant. Never a user error; CLI exit code 3.
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Work refused by a resource guard (e.g. an oracle table that would not
/// fit in memory). CLI exit code 2.
class resource_limit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace denum
