#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tokenlap {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised for malformed graph6 or family text. `offset` is the byte offset
/// within the record; `line` is the 1-based corpus line, or 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : Error(message + " (at byte " + std::to_string(offset) + ")"),
        message_(message),
        offset_(offset) {}

  /// Attaches a corpus line number to an error raised while parsing a record.
  ParseError(const ParseError& inner, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + inner.what()),
        message_(inner.message_),
        offset_(inner.offset_),
        line_(line) {}

  const std::string& message() const noexcept { return message_; }
  std::size_t offset() const noexcept { return offset_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string message_;
  std::size_t offset_;
  std::size_t line_ = 0;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace tokenlap
