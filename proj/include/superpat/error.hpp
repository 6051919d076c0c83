#pragma once

#include <stdexcept>
#include <string>

namespace superpat {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (word strings, CLI arguments).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An argument outside the operation's domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Evaluation at a root of the denominator.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Request larger than a configured size cap.
class SizeLimitExceeded : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An exhaustive search would visit more words than the budget allows.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A bounded search finished without a result.
class NotFound : public Error {
 public:
  using Error::Error;
};

}  // namespace superpat
