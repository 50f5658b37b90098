#pragma once

#include <stdexcept>
#include <string>

namespace symmoment {

/// Base of every error the library throws. The CLI maps subclasses to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation (exit code 2).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A configured size cap was exceeded (exit code 4).
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// An identity the library relies on failed to hold; this is a defect (exit code 3).
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Least-squares main-term fit could not be produced.
class FitError : public Error {
 public:
  using Error::Error;
};

/// Malformed or inconsistent cache / input file.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace symmoment
