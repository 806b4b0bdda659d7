#pragma once

#include <stdexcept>
#include <string>

namespace credcycle {

// Base for all domain errors. `exit_code` maps onto the CLI contract:
// 2 = validation, 3 = I/O.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what, int exit_code = 1)
      : std::runtime_error(what), exit_code_(exit_code) {}
  int exit_code() const noexcept { return exit_code_; }

 private:
  int exit_code_;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(what, 2) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what, 2) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(what, 3) {}
};

// Fee would make self-financing cheaper than borrowing.
class FeeTooLarge : public ValidationError {
 public:
  explicit FeeTooLarge(const std::string& what) : ValidationError(what) {}
};

class ZeroPrice : public ValidationError {
 public:
  explicit ZeroPrice(const std::string& what) : ValidationError(what) {}
};

class NegativePrice : public ValidationError {
 public:
  explicit NegativePrice(const std::string& what) : ValidationError(what) {}
};

// Collateral value cannot support any debt at the required haircut.
class FullWipeout : public Error {
 public:
  explicit FullWipeout(const std::string& what) : Error(what) {}
};

class InsolventBank : public Error {
 public:
  explicit InsolventBank(const std::string& what) : Error(what) {}
};

class ZeroSpread : public ValidationError {
 public:
  explicit ZeroSpread(const std::string& what) : ValidationError(what) {}
};

}  // namespace credcycle
