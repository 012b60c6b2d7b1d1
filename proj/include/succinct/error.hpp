#pragma once

#include <stdexcept>
#include <string>

namespace succinct {

/// Malformed or inconsistent input: bad symbols, syntax errors, schema violations.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A configured size cap (subset states, profiles, carrier elements) was exceeded.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace succinct
