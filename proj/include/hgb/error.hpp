#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hgb {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Operands belong to different rings (kind, generators, or order differ).
class RingMismatchError : public Error {
public:
  using Error::Error;
};

class NoLeadingTermError : public Error {
public:
  NoLeadingTermError() : Error("zero polynomial has no leading term") {}
};

/// A reduction was requested whose divisibility/factor precondition fails.
class NotReducibleError : public Error {
public:
  using Error::Error;
};

/// Bad arguments to an algorithm (zero relation, bound too small, ...).
class InputError : public Error {
public:
  using Error::Error;
};

class DegreeMismatchError : public Error {
public:
  using Error::Error;
};

/// Series inversion needs a constant term of +1 or -1.
class NonUnitError : public Error {
public:
  using Error::Error;
};

/// The presentation is not homogeneous, so the quotient is not graded.
class GradingError : public Error {
public:
  using Error::Error;
};

/// A truncated completion is too shallow to count normal words up to the
/// requested degree.
class SaturationError : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + message),
        line_(line), column_(column), message_(message) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

} // namespace hgb
