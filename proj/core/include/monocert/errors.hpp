#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace monocert {

enum class ParseErrorKind { Syntax, UnknownIdentifier, NonIntegerExponent };

/// Raised by parse(). offset() is the byte offset into the input text.
class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, std::size_t offset, const std::string& message)
      : std::runtime_error("offset " + std::to_string(offset) + ": " + message),
        kind_(kind),
        offset_(offset),
        message_(message) {}

  ParseErrorKind kind() const noexcept { return kind_; }
  std::size_t offset() const noexcept { return offset_; }
  const std::string& message() const noexcept { return message_; }

 private:
  ParseErrorKind kind_;
  std::size_t offset_;
  std::string message_;
};

/// Raised when an expression is evaluated outside its domain (division by
/// zero, overflow to a non-finite value). Carries the printed subexpression.
class DomainError : public std::runtime_error {
 public:
  DomainError(const std::string& message, std::string subexpression)
      : std::runtime_error(message + " in '" + subexpression + "'"),
        subexpression_(std::move(subexpression)) {}

  const std::string& subexpression() const noexcept { return subexpression_; }

 private:
  std::string subexpression_;
};

/// A certification routine was called on input that violates its stated
/// precondition (e.g. potential reconstruction of a field that is not curl-free).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace monocert
