#pragma once

#include <stdexcept>
#include <string>

namespace chaoswm {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A cell, coefficient or pixel index outside its valid range.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// A numeric argument outside the domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A strategy ran out of terms before the requested number of steps.
class InsufficientStrategyError : public Error {
 public:
  using Error::Error;
};

/// Authenticated/unauthenticated mode disagreement between key, params and MSC input.
class ModeMismatchError : public Error {
 public:
  using Error::Error;
};

/// A payload or state space exceeding what the operation supports.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Operands whose lengths or image dimensions disagree.
class DimensionMismatchError : public Error {
 public:
  using Error::Error;
};

/// Malformed image or key file.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace chaoswm
