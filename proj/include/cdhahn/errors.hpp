#pragma once

#include <stdexcept>
#include <string>

namespace cdhahn {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Evaluation at (or within tolerance of) a pole of the gamma function.
class PoleError : public DomainError {
 public:
  explicit PoleError(const std::string& msg) : DomainError(msg) {}
};

// Result magnitude exceeds double range.
class OverflowError : public Error {
 public:
  explicit OverflowError(const std::string& msg) : Error(msg) {}
};

// Iteration or evaluation budget exhausted before reaching tolerance.
class NoConvergence : public Error {
 public:
  explicit NoConvergence(const std::string& msg) : Error(msg) {}
};

}  // namespace cdhahn
