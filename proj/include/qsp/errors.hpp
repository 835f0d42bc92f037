// Exception types shared by every module.
#pragma once

#include <stdexcept>
#include <string>

namespace qsp {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Arithmetic
class ContextError : public Error { using Error::Error; };
class DivisionByZero : public Error { using Error::Error; };
class PoleError : public Error { using Error::Error; };
class DomainError : public Error { using Error::Error; };
class DivisibilityError : public Error { using Error::Error; };
class OverflowError : public Error { using Error::Error; };

// Structural
class InvalidSpec : public Error { using Error::Error; };
class InvariantViolation : public Error { using Error::Error; };
class ShapeError : public Error { using Error::Error; };
class ParseError : public Error { using Error::Error; };

// Refusals: the computation would be too large or is not determined.
class CapExceeded : public Error { using Error::Error; };
class CollisionError : public Error { using Error::Error; };

}  // namespace qsp
