#pragma once

#include <stdexcept>
#include <string>

namespace latkit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: wrong shapes, non-symmetric Gram, unknown names.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// An operation's documented precondition does not hold for the given data.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The requested level exceeds what the stored precision can certify.
class InsufficientPrecision : public Error {
 public:
  using Error::Error;
};

/// A configured size cap (group closure, Clifford rank) was exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace latkit
