#pragma once

#include <stdexcept>
#include <string>

namespace ellspin {

/// Bad user-facing configuration: unknown type, rank out of range, characteristic 2.
class ConfigurationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its mathematical domain (non-root, non-elliptic, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Internal consistency failure; indicates a bug or corrupted input data.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Enumeration ran past its element or sample budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::size_t partial)
      : std::runtime_error(what), partial_(partial) {}
  std::size_t partialCount() const noexcept { return partial_; }

 private:
  std::size_t partial_;
};

/// An oracle or table comparison disagreed.
class VerificationMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ellspin
