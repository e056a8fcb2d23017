#pragma once

// Batch validation over a range of odd moduli: order agreement, the
// valuation-sum identity, the irreducible cycle count, and sampled group
// axioms. Results are produced in ascending q regardless of worker count.

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "oddcycles/modulus.hpp"

namespace oddcycles::cli {

enum class Check : unsigned { kOrder = 1, kTau = 2, kProp3 = 4, kGroup = 8 };

class CheckSet {
 public:
  constexpr CheckSet() = default;
  static constexpr CheckSet all() { return CheckSet(0xf); }

  /// Parses a comma-separated list of order, tau, prop3, group, all.
  /// Throws DomainError on an unknown name.
  static CheckSet parse(const std::string& list);

  constexpr CheckSet& add(Check c) {
    bits_ |= static_cast<unsigned>(c);
    return *this;
  }
  constexpr bool has(Check c) const { return (bits_ & static_cast<unsigned>(c)) != 0; }
  constexpr bool empty() const { return bits_ == 0; }

  /// Checks in canonical order.
  std::vector<Check> members() const;

 private:
  constexpr explicit CheckSet(unsigned bits) : bits_(bits) {}
  unsigned bits_ = 0;
};

std::string check_name(Check c);

enum class Status { kPass, kFail, kSkipped };

std::string status_name(Status s);

struct CheckOutcome {
  Check check = Check::kOrder;
  Status status = Status::kPass;
  std::string detail;
};

struct SweepResult {
  u64 q = 0;
  std::vector<CheckOutcome> outcomes;
  std::optional<std::string> first_failure;
  std::chrono::nanoseconds elapsed{0};

  bool failed() const;
};

struct SweepConfig {
  u64 lo = 3;
  u64 hi = 3;
  CheckSet checks = CheckSet::all();
  unsigned workers = 1;
  u64 max_memory = u64{1} << 30;
  u64 group_samples = 1000;
  u64 seed = 0;
};

struct SweepSummary {
  u64 total = 0;
  u64 passed = 0;
  u64 failed = 0;
  u64 skipped = 0;
};

/// Runs every configured check on one modulus.
SweepResult evaluate(const OddModulus& q, const SweepConfig& config);

/// Streams one result per odd q in [lo, hi], ascending, to sink. Throws
/// DomainError when lo > hi, either bound is even, or lo < 3.
SweepSummary run_sweep(const SweepConfig& config,
                       const std::function<void(const SweepResult&)>& sink);

}  // namespace oddcycles::cli
