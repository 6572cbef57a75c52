#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace liouville {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A denominator vanished at an evaluation point.
class PoleError : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Input uses something outside the rational-expression grammar.
class NonRationalError : public Error {
 public:
  NonRationalError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class ZeroDenominatorError : public Error {
 public:
  using Error::Error;
};

// Antiderivative requested for an integrand whose log part does not vanish.
class NotRational : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class Timeout : public Error {
 public:
  using Error::Error;
};

}  // namespace liouville
