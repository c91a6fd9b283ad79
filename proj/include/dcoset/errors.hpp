#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dcoset {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands come from different Coxeter systems.
class SystemMismatch : public Error {
 public:
  using Error::Error;
};

// Parabolic frames of two cosets or expressions do not chain.
class FrameMismatch : public Error {
 public:
  using Error::Error;
};

class NotCore : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace dcoset
