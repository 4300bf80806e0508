#pragma once

#include <stdexcept>
#include <string>

namespace lgd {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

class NotInvertible : public Error {
public:
    using Error::Error;
};

/// Requested level is at or beyond the truncation depth of a p-adic set.
class DepthExceeded : public Error {
public:
    using Error::Error;
};

/// The prime divides the discriminant of the integral model.
class BadReduction : public Error {
public:
    using Error::Error;
};

/// The prime is not admissible for a local divisibility test.
class BadPrime : public Error {
public:
    using Error::Error;
};

/// Malformed textual input (curve, point, set record, generator list).
class ParseError : public Error {
public:
    using Error::Error;
};

/// A check over a prime set found no admissible prime below the limit.
class EmptySample : public Error {
public:
    using Error::Error;
};

/// A hard computational cap was hit (point counting bound, group closure size).
class LimitExceeded : public Error {
public:
    using Error::Error;
};

} // namespace lgd
