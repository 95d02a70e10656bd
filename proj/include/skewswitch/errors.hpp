#pragma once

#include <stdexcept>
#include <string>

namespace skewswitch {

// Base of every error the library throws for bad input or unmet
// preconditions. Internal invariant violations use std::logic_error.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidModulus : public Error {
 public:
  using Error::Error;
};

// A raw matrix failed the skew-symmetry / zero-diagonal check. Row and
// column are 1-indexed so they can be reported to users verbatim.
class ValidationError : public Error {
 public:
  ValidationError(int row, int col, const std::string& what)
      : Error(what), row_(row), col_(col) {}

  int row() const { return row_; }
  int col() const { return col_; }

 private:
  int row_;
  int col_;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

// Two matrices were compared that do not share modulus and size.
class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class NotCoprime : public Error {
 public:
  using Error::Error;
};

// An enumeration would exceed its resource guard.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

class IncomparableSpec : public Error {
 public:
  using Error::Error;
};

}  // namespace skewswitch
