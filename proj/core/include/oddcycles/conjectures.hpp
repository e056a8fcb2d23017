#pragma once

// Checks of the two cycle-symmetry conjectures: every cycle of a divisor of
// F_n has length 2^n, and the k-cycle counts of M_p (and the symmetry
// N_k == N_{p-k} for its divisors).

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "oddcycles/cycles.hpp"
#include "oddcycles/modulus.hpp"

namespace oddcycles {

/// F_n = 2^(2^n) + 1 for 0 <= n <= 5.
u64 fermat_number(unsigned n);

/// M_p = 2^p - 1 for prime p with M_p <= OddModulus::kMax.
u64 mersenne_number(u64 p);

struct ConjectureTarget {
  enum class Kind { kFermat, kMersenne };

  Kind kind;
  u64 index;  // n for Fermat, p for Mersenne

  static ConjectureTarget fermat(unsigned n);
  static ConjectureTarget mersenne(u64 p);

  /// F_n or M_p.
  u64 number() const;

  /// Order of 2 modulo every divisor d > 1 of number(): 2^(n+1) or p.
  u64 divisor_order() const;

  std::string label() const;

  friend bool operator==(const ConjectureTarget&, const ConjectureTarget&) = default;
};

enum class Verdict { kPass, kFail };

/// A cycle whose length is not 2^n.
struct LengthWitness {
  u64 length;
  u64 count;
};

/// N_k differs from what the criterion requires at length k.
struct CountWitness {
  u64 k;
  u64 observed;
  u64 expected;
};

using Witness = std::variant<LengthWitness, CountWitness>;

std::string describe(const Witness& w);

struct ConjectureReport {
  u64 subject = 0;
  ConjectureTarget target{ConjectureTarget::Kind::kFermat, 0};
  Verdict verdict = Verdict::kPass;
  LengthHistogram histogram;
  /// (k, expected N_k) for every k the criterion constrains.
  std::vector<std::pair<u64, u64>> expected;
  std::optional<Witness> first_violation;
  std::chrono::nanoseconds elapsed{0};

  bool passed() const noexcept { return verdict == Verdict::kPass; }
};

/// Pass iff every cycle of d, reducible ones included, has length 2^n.
ConjectureReport check_fermat_cycles(const OddModulus& d, unsigned n,
                                     u64 max_memory = DecomposeOptions::kDefaultMaxMemory);

/// Pass iff N_k of M_p equals cycle_count_formula(p, k) for k = 1..p-1 and
/// no other lengths occur.
ConjectureReport check_mersenne_counts(u64 p,
                                       u64 max_memory = DecomposeOptions::kDefaultMaxMemory);

/// Pass iff N_k == N_{p-k} for every length k present (absent lengths are 0).
ConjectureReport check_mersenne_symmetry(const OddModulus& d, u64 p,
                                         u64 max_memory = DecomposeOptions::kDefaultMaxMemory);

/// Evaluates the target's criterion on d without a range context.
ConjectureReport check_criterion(const OddModulus& d, const ConjectureTarget& target,
                                 u64 max_memory = DecomposeOptions::kDefaultMaxMemory);

struct ScreenOptions {
  /// Skip full decomposition when epsilon(d) != target.divisor_order().
  /// Only divisors survive it, so a non-divisor satisfying the criterion
  /// is invisible with the prefilter on.
  bool prefilter = true;
  unsigned workers = 1;
  u64 max_memory = DecomposeOptions::kDefaultMaxMemory;
};

struct ScreenCandidate {
  u64 d;
  bool divides_target;
  ConjectureReport report;
};

/// A modulus where the criterion and true divisibility disagree.
struct ScreenViolation {
  u64 d;
  bool criterion_passed;
  bool divides_target;
  std::optional<Witness> witness;
};

struct ScreenRefusal {
  u64 d;
  u64 required_bytes;
};

struct ScreenResult {
  u64 lo = 0;
  u64 hi = 0;
  ConjectureTarget target{ConjectureTarget::Kind::kFermat, 0};
  bool prefilter = true;
  u64 examined = 0;
  u64 decomposed = 0;
  std::vector<ScreenCandidate> candidates;  // ascending by d
  std::vector<ScreenViolation> violations;  // ascending by d
  std::vector<ScreenRefusal> refusals;      // ascending by d
};

/// Sweeps odd d in [lo, hi] (d > 1). Candidates are the d that pass the
/// full-decomposition criterion; each is checked against true divisibility.
ScreenResult screen(u64 lo, u64 hi, const ConjectureTarget& target,
                    const ScreenOptions& options = {});

struct Eq4Identity {
  u64 lhs;  // (2^p - 2) / 2
  u64 rhs;  // sum of k * cycle_count_formula(p, k)
  bool holds;
};

Eq4Identity eq4_identity(u64 p);

}  // namespace oddcycles
