#pragma once

#include <stdexcept>
#include <string>

namespace senti {

// Each error family maps onto one CLI exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual int exit_code() const noexcept = 0;
};

// Unreadable or malformed input files, bad arguments.
class InputError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 2; }
};

class LexiconError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 3; }
};

// Singular local windows and similar numerical failures.
class NumericalError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 4; }
};

}  // namespace senti
