#pragma once

#include <stdexcept>
#include <string>

namespace kpq {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An enumeration exceeded its configured cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A cross-check between two independent computations disagreed.
class VerificationFailed : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Always a bug, never bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace kpq
