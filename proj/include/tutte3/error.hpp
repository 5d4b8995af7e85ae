#pragma once

#include <stdexcept>
#include <string>

namespace tutte3 {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An element or subset falls outside the ground set it is used with.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A basis or circuit family violates the matroid axioms.
class AxiomViolation : public Error {
 public:
  using Error::Error;
};

/// Two results that must agree do not; always an implementation bug.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace tutte3
