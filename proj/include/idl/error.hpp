#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace idl {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. Carries a 1-based source position.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Undeclared symbol, arity mismatch, or clashing declaration.
class VocabularyError : public Error {
 public:
  using Error::Error;
};

/// A value or structure violates the contract of an operation
/// (unground term, free variable, missing interpretation, ...).
class SemanticError : public Error {
 public:
  using Error::Error;
};

/// A configurable resource cap was exceeded.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace idl
