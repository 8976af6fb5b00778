#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace trilocal {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands belong to different families, alphabets or coefficient rings.
class MismatchError : public Error {
 public:
  using Error::Error;
};

/// An argument violates an operation's precondition (k < 2, a₀m ≠ mb₀, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The requested operation is not available for this family or ring.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Malformed JSON descriptor or module specification.
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// Rewriting exceeded its reduction budget.
class BudgetExhausted : public Error {
 public:
  explicit BudgetExhausted(std::size_t limit)
      : Error("normalization exceeded the step budget of " +
              std::to_string(limit) + " reductions"),
        limit_(limit) {}

  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t limit_;
};

/// Syntax error in an element expression. Offsets are 0-based, columns 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : Error("syntax error at offset " + std::to_string(offset) +
              " (line 1, column " + std::to_string(offset + 1) + "): " + message),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }
  std::size_t line() const noexcept { return 1; }
  std::size_t column() const noexcept { return offset_ + 1; }

 private:
  std::size_t offset_;
};

}  // namespace trilocal
