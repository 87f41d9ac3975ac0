#pragma once

#include <stdexcept>
#include <string>

namespace qccs {

/// Base of all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside an operation's domain (dimension mismatch, range, bad params).
class InvalidInput : public Error {
public:
    using Error::Error;
};

class NotQuadratic : public Error {
public:
    using Error::Error;
};

class InvalidSuperposition : public Error {
public:
    using Error::Error;
};

/// A seed function fails the path condition.
class SeedError : public Error {
public:
    using Error::Error;
};

/// A seed is valid for a single CCC but violates the layout the QCCS bound needs.
class ConstraintError : public Error {
public:
    using Error::Error;
};

/// Malformed or truncated serialized input.
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace qccs
