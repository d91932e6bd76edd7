#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace folim {

/// Input does not satisfy a structure invariant or a usage precondition.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. `offset()` is the byte offset of the offending token.
class ParseError : public ValidationError {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : ValidationError(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A formula references a constant that the structure does not interpret.
class EvalError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Input is outside the image of a codec.
class DecodeError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Computation would exceed a caller-configured cost budget.
class BudgetExceeded : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// A limit-modeling query walked past the truncation depth.
class TruncationBoundary : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// A proven bound or internal invariant was violated. Always a bug or a
/// counterexample, never bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace folim
