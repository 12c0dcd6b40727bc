#pragma once

#include <stdexcept>
#include <string>

namespace sqfree {

// Base of every error the library throws. The C API maps each subclass to a
// distinct status code.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
  ParseError(const std::string& msg, std::size_t position)
      : Error(msg), position_(position) {}
  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

class LengthMismatchError : public Error {
public:
  using Error::Error;
};

class DegenerateLengthError : public Error {
public:
  using Error::Error;
};

class RangeError : public Error {
public:
  using Error::Error;
};

class BudgetError : public Error {
public:
  using Error::Error;
};

class PreconditionError : public Error {
public:
  using Error::Error;
};

class ConfigError : public Error {
public:
  using Error::Error;
};

} // namespace sqfree
