#pragma once

#include <stdexcept>
#include <string>

namespace signvec {

/// Malformed or out-of-range caller input (bad indices, mismatched dimensions).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Text that cannot be parsed as a vector or family file.
class ParseError : public InputError {
public:
    using InputError::InputError;
};

/// Arguments outside the range where a formula or construction is defined.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An operation was called without its documented precondition holding.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A ratio or graph construction that would divide by zero or has an empty side.
class DegenerateInstance : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Oracle-scale routines refuse inputs above their guard instead of running forever.
class SizeGuardError : public std::length_error {
public:
    using std::length_error::length_error;
};

} // namespace signvec
