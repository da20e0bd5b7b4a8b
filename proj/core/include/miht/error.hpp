#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace miht {

/// Base class for every error raised by the library. Argument-domain
/// violations use std::invalid_argument instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed `.ts` input. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Hyperparameters or training data that cannot produce a model.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Unreadable, truncated, or wrong-version model file.
class ModelFormatError : public Error {
 public:
  using Error::Error;
};

/// A run exceeded the deadline given in its RunControl.
class TimeoutError : public Error {
 public:
  using Error::Error;
};

}  // namespace miht
