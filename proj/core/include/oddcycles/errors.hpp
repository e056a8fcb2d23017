#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace oddcycles {

// Input outside an operation's domain (even modulus, residue out of range,
// non-prime exponent, ...). Callers map this to a usage error.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exact result does not fit the integer width; never wrapped silently.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// A computation would exceed its configured memory or trial budget.
// Carries the estimate so the caller can decide whether to raise the cap.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t required,
                 std::uint64_t budget)
      : std::runtime_error(what), required_(required), budget_(budget) {}

  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

}  // namespace oddcycles
