#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bentkit {

/// Argument outside the mathematical domain of an operation: index out of
/// range, dimension mismatch, unsupported variable count.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The brute-force oracles refuse inputs whose cost grows as 4^n.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A construction hypothesis does not hold (e.g. the seed is not bent).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a result that must hold by construction does not. Always a bug.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed text input. Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what + " at line " + std::to_string(line) +
                           ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Well-formed tokens that disagree with each other (header n vs data length).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bentkit
