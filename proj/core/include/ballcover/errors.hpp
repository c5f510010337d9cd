#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ballcover {

enum class ErrorKind {
  kInput,
  kPrecondition,
  kNoPath,
  kBudget,
  kEmpty,
  kDensityWitness,
  kInternal,
};

std::string_view to_string(ErrorKind kind);

// Base of every error raised by the library. The kind drives the CLI exit
// code; the message names the offending input where one exists.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class InputError : public Error {
 public:
  explicit InputError(const std::string& message)
      : Error(ErrorKind::kInput, message) {}
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& message)
      : Error(ErrorKind::kPrecondition, message) {}
};

class NoPathError : public Error {
 public:
  explicit NoPathError(const std::string& message)
      : Error(ErrorKind::kNoPath, message) {}
};

class EmptyError : public Error {
 public:
  explicit EmptyError(const std::string& message)
      : Error(ErrorKind::kEmpty, message) {}
};

class InternalError : public Error {
 public:
  explicit InternalError(const std::string& message)
      : Error(ErrorKind::kInternal, message) {}
};

// Raised by the exact searches when the node budget runs out. `best_bound`
// is the best value found so far (a lower bound for maximization, an upper
// bound for minimization).
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& message, std::int64_t best_bound)
      : Error(ErrorKind::kBudget, message), best_bound_(best_bound) {}

  std::int64_t best_bound() const noexcept { return best_bound_; }

 private:
  std::int64_t best_bound_;
};

}  // namespace ballcover
