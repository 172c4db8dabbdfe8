#pragma once

#include <stdexcept>
#include <string>

namespace suboplex {

/// Input or precondition violation (malformed data, inconsistent ground
/// size, non-intersection-closed poset where one is required, ...).
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A configured size cap was exceeded (ground set too large for an
/// exhaustive routine, too many variables for the oracle, ...).
class CapExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

}  // namespace suboplex
