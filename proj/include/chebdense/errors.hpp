#pragma once

#include <stdexcept>

namespace chebdense {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A requested table or buffer does not fit the configured memory budget.
class CapacityError : public Error {
 public:
  using Error::Error;
};

class OutOfRangeError : public Error {
 public:
  using Error::Error;
};

// Caller supplied arguments outside an operation's domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Malformed or inconsistent configuration (context files, environment).
class ConfigError : public Error {
 public:
  using Error::Error;
};

class MissingPrimesError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

}  // namespace chebdense
