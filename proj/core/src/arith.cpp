#include "oddcycles/arith.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <string>

#include "oddcycles/errors.hpp"

namespace oddcycles {

unsigned two_adic_valuation(u64 n) {
  if (n == 0) throw DomainError("two-adic valuation of 0 is undefined");
  return static_cast<unsigned>(std::countr_zero(n));
}

u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

namespace {

bool strong_probable_prime(u64 n, u64 a, u64 d, unsigned r) {
  u64 x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned i = 1; i < r; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

// Pollard-Brent rho on an odd composite n.
u64 find_factor(u64 n) {
  for (u64 c = 1;; ++c) {
    auto f = [&](u64 x) { return (mul_mod(x, x, n) + c) % n; };
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    const u64 m = 128;
    u64 r = 1;
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_large(u64 n, std::vector<u64>& primes) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  const u64 f = find_factor(n);
  split_large(f, primes);
  split_large(n / f, primes);
}

constexpr u64 kTrialLimit = u64{1} << 21;

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  static constexpr std::array<u64, 12> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 p : kBases) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (u64 a : kBases) {
    if (!strong_probable_prime(n, a, d, r)) return false;
  }
  return true;
}

Factorization::Factorization(std::vector<PrimePower> factors) : factors_(std::move(factors)) {}

u64 Factorization::value() const {
  u64 v = 1;
  for (const auto& [p, e] : factors_)
    for (unsigned i = 0; i < e; ++i) v *= p;
  return v;
}

std::vector<u64> Factorization::divisors() const {
  std::vector<u64> out{1};
  for (const auto& [p, e] : factors_) {
    const std::size_t base = out.size();
    u64 pk = 1;
    for (unsigned i = 0; i < e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Factorization factorize(u64 n) {
  if (n < 2) throw DomainError("factorize requires n >= 2; got " + std::to_string(n));
  std::vector<PrimePower> factors;
  auto take = [&](u64 p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) factors.push_back({p, e});
  };
  take(2);
  for (u64 p = 3; p <= kTrialLimit && p * p <= n; p += 2) take(p);

  if (n > 1) {
    std::vector<u64> large;
    split_large(n, large);
    std::sort(large.begin(), large.end());
    for (u64 p : large) {
      if (!factors.empty() && factors.back().prime == p)
        ++factors.back().exponent;
      else
        factors.push_back({p, 1});
    }
  }
  return Factorization(std::move(factors));
}

u64 euler_totient(const Factorization& f) {
  u64 phi = 1;
  for (const auto& [p, e] : f.factors()) {
    phi *= p - 1;
    for (unsigned i = 1; i < e; ++i) phi *= p;
  }
  return phi;
}

u64 euler_totient(const OddModulus& q) { return euler_totient(factorize(q.value())); }

namespace {

u64 order_by_doubling(u64 q) {
  u64 x = 2 % q;
  u64 r = 1;
  while (x != 1) {
    x <<= 1;
    if (x >= q) x -= q;
    ++r;
  }
  return r;
}

u64 order_by_totient_divisors(u64 q) {
  // phi(q) >= 2 for odd q > 1.
  const Factorization phi = factorize(euler_totient(factorize(q)));
  u64 order = phi.value();
  // Strip each prime from the order while 2^order stays 1.
  for (const auto& [p, e] : phi.factors()) {
    for (unsigned i = 0; i < e; ++i) {
      if (pow_mod(2, order / p, q) != 1) break;
      order /= p;
    }
  }
  return order;
}

}  // namespace

u64 order2_oracle(const OddModulus& q, OrderMethod method) {
  const u64 v = q.value();
  switch (method) {
    case OrderMethod::kDoubling:
      return order_by_doubling(v);
    case OrderMethod::kTotientDivisors:
      return order_by_totient_divisors(v);
    case OrderMethod::kAuto:
      break;
  }
  return v < (u64{1} << 16) ? order_by_doubling(v) : order_by_totient_divisors(v);
}

u64 cycle_count_formula(u64 p, u64 k) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (k < 1 || k > p - 1) {
    throw DomainError("k must lie in [1, p-1]; got k=" + std::to_string(k) +
                      " for p=" + std::to_string(p));
  }
  // (p-1)! / (k! (p-k)!) == C(p-1, k-1) / k. Build C(p-1, j) for j up to
  // k-1 by the exact recurrence C(n, j) = C(n, j-1) * (n-j+1) / j.
  const u64 n = p - 1;
  const u64 j_max = std::min(k - 1, n - (k - 1));
  u128 c = 1;
  for (u64 j = 1; j <= j_max; ++j) {
    u128 next;
    if (__builtin_mul_overflow(c, static_cast<u128>(n - j + 1), &next)) {
      throw OverflowError("cycle_count_formula(" + std::to_string(p) + ", " +
                          std::to_string(k) + ") overflows 128-bit intermediates");
    }
    c = next / j;
  }
  const u128 result = c / k;
  if (c % k != 0) {
    throw DomainError("non-integral cycle count; p=" + std::to_string(p) +
                      " is not prime");
  }
  if (result > static_cast<u128>(~u64{0})) {
    throw OverflowError("cycle_count_formula(" + std::to_string(p) + ", " +
                        std::to_string(k) + ") does not fit 64 bits");
  }
  return static_cast<u64>(result);
}

u64 legendre_tau_ratio(const OddModulus& q) {
  const u64 top = 2 * (q.value() - 1);
  const u64 bottom = q.value() - 1;
  u64 sum = 0;
  for (unsigned j = 1; j < 64 && (top >> j) > 0; ++j) sum += (top >> j) - (bottom >> j);
  return sum;
}

}  // namespace oddcycles
