#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qpoly {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input was well formed but the requested computation is undefined for it.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input (literals, expressions, files).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        message_(what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }
  /// The description without the position suffix.
  const std::string& message() const noexcept { return message_; }

 protected:
  struct Preformatted {};
  ParseError(Preformatted, const std::string& message, std::size_t position)
      : Error(message), message_(message), position_(position) {}

 private:
  std::string message_;
  std::size_t position_;
};

#define QPOLY_DOMAIN_ERROR(Name)        \
  class Name : public DomainError {     \
   public:                              \
    using DomainError::DomainError;     \
  };

QPOLY_DOMAIN_ERROR(DivisionByZero)
QPOLY_DOMAIN_ERROR(ZeroConjugator)
QPOLY_DOMAIN_ERROR(NonPowerOfTwoLength)
QPOLY_DOMAIN_ERROR(DivisorZero)
QPOLY_DOMAIN_ERROR(SingularTransform)
QPOLY_DOMAIN_ERROR(EmptySampleSet)
QPOLY_DOMAIN_ERROR(InfeasiblePoints)
QPOLY_DOMAIN_ERROR(NumericallySingular)
QPOLY_DOMAIN_ERROR(PoleCollision)
QPOLY_DOMAIN_ERROR(BracketsNotAllowed)
QPOLY_DOMAIN_ERROR(SizeMismatch)

#undef QPOLY_DOMAIN_ERROR

class SyntaxError : public ParseError {
 public:
  using ParseError::ParseError;
};

class PowerNotSupported : public SyntaxError {
 public:
  explicit PowerNotSupported(std::size_t position)
      : SyntaxError("power operator '^' is not supported", position) {}
};

/// Malformed content of an input file, located by line and column (1-based).
class FileFormatError : public ParseError {
 public:
  FileFormatError(const std::string& source, std::size_t line, std::size_t column,
                  const std::string& message)
      : ParseError(Preformatted{}, source + ":" + std::to_string(line) + ":" +
                                       std::to_string(column) + ": " + message,
                   column),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A file could not be opened or read.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace qpoly
