#pragma once

// The binary operation (a, b) -> (ab - sq) / 2^t on odd residues coprime to
// q, the classes it induces (the irreducible cycles), and empirical checks of
// the group axioms on those classes.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oddcycles/modulus.hpp"

namespace oddcycles {

/// Odd part of ab mod q. Both arguments must be odd, in (0, q) and coprime
/// to q; throws DomainError otherwise.
u64 star(const OddModulus& q, u64 a, u64 b);

/// Like star() but also returns t, the power of two removed.
struct StarResult {
  u64 value;
  unsigned shift;
};
StarResult star_with_shift(const OddModulus& q, u64 a, u64 b);

/// A class of G_q* named by the minimum element of its cycle.
struct ClassRep {
  OddModulus q;
  u64 rep;

  friend bool operator==(const ClassRep&, const ClassRep&) = default;
};

ClassRep class_of(const OddModulus& q, u64 x);

/// Dense lookup from coprime odd residues to class indices; built once per
/// modulus from a single decomposition pass.
class ClassIndex {
 public:
  static constexpr std::uint32_t kNone = 0xffffffffu;

  explicit ClassIndex(const OddModulus& q);

  const OddModulus& modulus() const noexcept { return q_; }

  /// Representatives (cycle minima) of the irreducible cycles, ascending.
  const std::vector<u64>& reps() const noexcept { return reps_; }
  std::size_t size() const noexcept { return reps_.size(); }

  /// Index into reps() of the class containing x, or kNone if x is not a
  /// coprime odd residue.
  std::uint32_t index_of(u64 x) const noexcept;

  /// Coprime residues, ascending.
  const std::vector<u64>& units() const noexcept { return units_; }

  /// Length of the cycle with the given class index.
  u64 class_length(std::uint32_t index) const { return lengths_[index]; }

  static u64 bytes_for(const OddModulus& q);

 private:
  OddModulus q_;
  std::vector<u64> reps_;
  std::vector<u64> lengths_;
  std::vector<u64> units_;
  std::vector<std::uint32_t> slot_class_;
};

/// Cayley table over class indices: at(i, j) is the index of reps[i] * reps[j].
class CayleyTable {
 public:
  CayleyTable(std::size_t order, std::vector<std::uint32_t> entries);

  std::size_t order() const noexcept { return order_; }
  std::uint32_t at(std::size_t row, std::size_t col) const {
    return entries_[row * order_ + col];
  }

 private:
  std::size_t order_;
  std::vector<std::uint32_t> entries_;
};

struct QuotientGroup {
  OddModulus q;
  std::vector<u64> reps;
  std::optional<CayleyTable> table;
  std::optional<std::string> notice;  // set when a requested table was omitted
};

/// Class representatives of G_q* / R_q*, with an optional Cayley table when
/// the class count is at most table_cap.
QuotientGroup quotient_group(const OddModulus& q, bool with_table,
                             std::size_t table_cap = 512);

enum class AxiomMode {
  kExhaustive,  // every pair / triple; refuses above the trial budget
  kSampled,     // seeded random triples
  kAuto         // exhaustive when within budget, sampled otherwise
};

struct AxiomCheckOptions {
  AxiomMode mode = AxiomMode::kAuto;
  u64 samples = 10'000;
  u64 seed = 0;
  u64 triple_budget = 10'000'000;
  u64 max_memory = u64{1} << 30;
};

struct AxiomResult {
  std::string name;
  bool passed = true;
  u64 trials = 0;
  std::optional<std::string> witness;
};

/// Per-axiom verdicts on the classes. element_associative records whether
/// (a*b)*c == a*(b*c) held as integers on every trial; it is a measurement,
/// not one of the group axioms, and does not affect passed().
struct AxiomReport {
  OddModulus q;
  AxiomMode mode;  // exhaustive or sampled, never kAuto
  u64 class_count = 0;
  std::vector<AxiomResult> axioms;  // well_defined, associative, commutative, identity, inverse
  bool element_associative = true;
  u64 element_associativity_failures = 0;
  std::optional<std::string> element_associativity_witness;

  bool passed() const noexcept;
};

/// Throws BudgetExceeded in exhaustive mode when (phi(q)/2)^3 exceeds
/// options.triple_budget.
AxiomReport verify_group_axioms(const OddModulus& q, const AxiomCheckOptions& options = {});

}  // namespace oddcycles
