#pragma once

#include <stdexcept>
#include <string>

namespace superflow {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  SingularMatrix() : Error("matrix is singular") {}
};

/// Group closure grew past the element cap (infinite or too large group).
class CapExceeded : public Error {
 public:
  explicit CapExceeded(std::size_t cap)
      : Error("group closure exceeded cap of " + std::to_string(cap) + " elements") {}
};

/// Conjugation would produce a non-monomial denominator.
class NonMonomialDenominator : public Error {
 public:
  NonMonomialDenominator()
      : Error("denominator not monomial: matrix is neither diagonal nor antidiagonal") {}
};

/// A point lies on the vanishing locus of a denominator or of a flow.
class SingularPoint : public Error {
 public:
  using Error::Error;
};

/// The radical branch anchored at t = 0 cannot be continued to the requested t.
class BranchError : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace superflow
