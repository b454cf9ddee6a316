#pragma once

#include <stdexcept>
#include <string>

namespace eisen {

// Base of all toolkit errors. code() is a short machine-readable tag that the
// CLI forwards verbatim in its JSON error objects.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error("domain", what) {}
};

class PoleError : public Error {
 public:
  explicit PoleError(const std::string& what) : Error("pole", what) {}
};

// Raised when truncated partial sums fail the doubling (Cauchy) test.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double last_increment, double previous_increment)
      : Error("convergence", what),
        last_increment_(last_increment),
        previous_increment_(previous_increment) {}
  double last_increment() const noexcept { return last_increment_; }
  double previous_increment() const noexcept { return previous_increment_; }

 private:
  double last_increment_;
  double previous_increment_;
};

class ConditioningError : public Error {
 public:
  explicit ConditioningError(const std::string& what) : Error("conditioning", what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error("io", what) {}
};

}  // namespace eisen
