#pragma once

#include <stdexcept>
#include <string>

namespace tevelev {

/// Base of every structured error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live in different rings.
class RingMismatch : public Error {
public:
    using Error::Error;
};

/// Malformed input: bad partition, bad label, unparsable space string.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Parameters are well-formed but outside what the library implements.
class OutOfRange : public Error {
public:
    using Error::Error;
};

/// A dimension constraint or branch precondition fails.
class ConstraintError : public Error {
public:
    using Error::Error;
};

/// A numerical result contradicts a structural guarantee (complex spectrum).
class NumericalFailure : public Error {
public:
    using Error::Error;
};

} // namespace tevelev
