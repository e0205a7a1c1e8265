#pragma once

#include <stdexcept>
#include <string>

namespace geocrystal {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidRank : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

// A subtraction-free denominator vanished; at positive points this means a bug.
class SingularPoint : public Error {
 public:
  using Error::Error;
};

class MissingBinding : public Error {
 public:
  using Error::Error;
};

class ResourceLimit : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Raised when a structural invariant that the theory guarantees does not hold
// (e.g. the 0-node operator finds zero or several admissible indices).
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace geocrystal
