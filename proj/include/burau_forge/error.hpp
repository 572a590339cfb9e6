#pragma once

#include <stdexcept>
#include <string>

namespace burau_forge {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the arguments of an operation does not hold.
class DomainError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Malformed word, JSON or numeric text.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Interval enclosures could not decide a comparison within the precision cap.
class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

}  // namespace burau_forge
