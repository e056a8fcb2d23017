#pragma once

// Elementary number-theoretic kernels. Everything here is independent of the
// cycle machinery so it can serve as the oracle the cycle results are
// checked against.

#include <cstdint>
#include <vector>

#include "oddcycles/modulus.hpp"

namespace oddcycles {

/// Largest t with 2^t | n. Throws DomainError for n == 0.
unsigned two_adic_valuation(u64 n);

u64 mul_mod(u64 a, u64 b, u64 m);
u64 pow_mod(u64 base, u64 exp, u64 m);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(u64 n);

struct PrimePower {
  u64 prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization, ascending by prime.
class Factorization {
 public:
  Factorization() = default;
  explicit Factorization(std::vector<PrimePower> factors);

  const std::vector<PrimePower>& factors() const noexcept { return factors_; }
  bool empty() const noexcept { return factors_.empty(); }

  /// Product of prime^exponent.
  u64 value() const;

  /// All positive divisors, ascending.
  std::vector<u64> divisors() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  std::vector<PrimePower> factors_;
};

/// Trial division up to 2^21, then Miller-Rabin on the cofactor, falling back
/// to Pollard-Brent rho for a composite cofactor. Throws DomainError for n < 2.
Factorization factorize(u64 n);

u64 euler_totient(const Factorization& f);
u64 euler_totient(const OddModulus& q);

enum class OrderMethod {
  kAuto,            // doubling for small q, divisor refinement otherwise
  kDoubling,        // iterate x <- 2x mod q until x == 1
  kTotientDivisors  // smallest divisor d of phi(q) with 2^d == 1
};

/// Multiplicative order of 2 modulo q, computed without any cycle walking.
u64 order2_oracle(const OddModulus& q, OrderMethod method = OrderMethod::kAuto);

/// (p-1)! / (k! (p-k)!) for prime p and 1 <= k <= p-1, exact.
/// Throws DomainError on bad arguments and OverflowError if the value does
/// not fit 64 bits.
u64 cycle_count_formula(u64 p, u64 k);

/// tau((2q-2)! / (q-1)!) by Legendre's formula.
u64 legendre_tau_ratio(const OddModulus& q);

}  // namespace oddcycles
