#pragma once

// Cycle structure of the successor map a -> (q + a) / 2^k on the odd
// residues of an odd modulus q, and the order-of-2 algorithm it yields.

#include <cstdint>
#include <map>
#include <vector>

#include "oddcycles/modulus.hpp"

namespace oddcycles {

/// One application of the successor map: q + from == 2^exponent * next.
struct Step {
  u64 next;
  unsigned exponent;

  friend bool operator==(const Step&, const Step&) = default;
};

/// Successor of an odd residue a in (0, q). Throws DomainError otherwise.
Step successor(const OddModulus& q, u64 a);

/// Inverse of successor: returns (a, k) with successor(q, a) == (b, k).
/// k is the unique exponent with q < 2^k * b < 2q.
Step predecessor(const OddModulus& q, u64 b);

/// Map from cycle length k to the number N_k of k-cycles.
class LengthHistogram {
 public:
  void add(u64 length, u64 count = 1);

  /// N_k, zero when no cycle has length k.
  u64 count(u64 length) const;

  /// Sum of k * N_k.
  u64 covered() const;

  /// Sum of N_k.
  u64 cycles() const;

  const std::map<u64, u64>& entries() const noexcept { return counts_; }
  bool empty() const noexcept { return counts_.empty(); }

  friend bool operator==(const LengthHistogram&, const LengthHistogram&) = default;

 private:
  std::map<u64, u64> counts_;
};

/// One orbit of the successor map, rotated so that its minimum comes first.
///
/// elements and steps are parallel: q + elements[i] == 2^steps[i] *
/// elements[(i + 1) % length]. Both may be empty when a decomposition drops
/// element lists; min, length, xi and gcd_with_q are always exact.
struct Cycle {
  u64 min = 0;
  u64 length = 0;
  u64 xi = 0;
  u64 gcd_with_q = 0;
  std::vector<u64> elements;
  std::vector<std::uint8_t> steps;

  bool irreducible() const noexcept { return gcd_with_q == 1; }
  bool has_elements() const noexcept { return !elements.empty(); }

  friend bool operator==(const Cycle&, const Cycle&) = default;
};

/// The cycle through a, canonically rotated.
Cycle cycle_from(const OddModulus& q, u64 a);

/// Sum of step exponents around the cycle through a, without storing it.
u64 cycle_xi(const OddModulus& q, u64 a);

/// Multiplicative order of 2 modulo q as the xi of the cycle through 1.
u64 epsilon(const OddModulus& q);

struct TauSum {
  u64 lhs;
  bool holds;
};

/// Sum of two_adic_valuation(q + x) over odd x in (0, q); holds iff == q - 1.
TauSum tau_sum_identity(const OddModulus& q);

/// Total number of cycles of q, from the divisor sum of phi(d) / ord_d(2)
/// over divisors d > 1. Uses the arithmetic oracle, not the cycle walk.
u64 expected_cycle_count(const OddModulus& q);

struct DecomposeOptions {
  static constexpr u64 kDefaultMaxMemory = u64{1} << 30;

  /// When false, element lists are kept only for cycles of length at most
  /// element_length_threshold, or for any cycle when q <= small_modulus.
  bool keep_elements = true;
  u64 max_memory = kDefaultMaxMemory;
  u64 element_length_threshold = 10'000;
  u64 small_modulus = 1'000'000;
};

struct CycleDecomposition {
  OddModulus q;
  std::vector<Cycle> cycles{};  // ascending by min
  u64 phi = 0;
  u64 epsilon = 0;
  u64 irreducible_count = 0;
  LengthHistogram histogram{};
  LengthHistogram irreducible_histogram{};
};

/// Bytes decompose() would need for q under the given options.
u64 decomposition_bytes(const OddModulus& q, const DecomposeOptions& options);

/// Full partition of the odd residues of q into cycles. Seeds are taken in
/// increasing order, so every cycle starts at its own minimum and the output
/// is sorted without a separate pass. Throws BudgetExceeded when the estimate
/// from decomposition_bytes() is above options.max_memory.
CycleDecomposition decompose(const OddModulus& q, const DecomposeOptions& options = {});

/// Statistics of a decomposition without per-cycle records. Memory is the
/// visited bitmap only, so this reaches moduli decompose() cannot hold.
struct DecompositionSummary {
  OddModulus q;
  u64 epsilon = 0;
  u64 cycle_count = 0;
  u64 irreducible_count = 0;
  u64 covered = 0;
  u64 xi_total = 0;
  bool irreducible_xi_constant = true;
  LengthHistogram histogram{};
  LengthHistogram irreducible_histogram{};
};

u64 summary_bytes(const OddModulus& q);

DecompositionSummary summarize(const OddModulus& q,
                               u64 max_memory = DecomposeOptions::kDefaultMaxMemory);

}  // namespace oddcycles
