#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sqturan {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter lies outside the documented range; the message names the bound.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive search hit its node limit before reaching an answer.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::int64_t nodes)
      : Error(what + " (nodes explored: " + std::to_string(nodes) + ")"), nodes_(nodes) {}

  std::int64_t nodes() const noexcept { return nodes_; }

 private:
  std::int64_t nodes_;
};

/// Power iteration failed to reach the residual tolerance within its cap.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// A result failed its own re-verification (e.g. an improper certificate).
class InternalCheckError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace sqturan
