#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tt {

// Malformed input data: out-of-range letters, inconsistent graphs, bad words.
class MalformedInputError : public std::runtime_error {
 public:
  explicit MalformedInputError(const std::string& what) : std::runtime_error(what) {}
};

// A documented precondition of an operation does not hold (named check).
class PreconditionError : public std::runtime_error {
 public:
  PreconditionError(std::string check, std::string message)
      : std::runtime_error(check + ": " + message),
        check_(std::move(check)),
        message_(std::move(message)) {}

  const std::string& check() const noexcept { return check_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::string check_;
  std::string message_;
};

// An internal consistency check failed; indicates a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

// Spec-file syntax error with position information.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace tt
