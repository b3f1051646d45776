#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace malle {

// Base for every domain failure raised by the library. The CLI maps these to
// exit code 1; argument-grammar problems never reach here.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input (patterns, group labels, record files).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Well-formed input that violates a domain invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A computation needs data the caller did not supply.
class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

}  // namespace malle
