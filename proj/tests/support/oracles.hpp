#pragma once

// Brute-force reference computations. Deliberately naive and independent of
// the library: no bit tricks, no factorization shortcuts, no cycle walking
// where the library walks cycles.

#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oddcycles::testing {

inline std::map<std::uint64_t, unsigned> trial_factor(std::uint64_t n) {
  std::map<std::uint64_t, unsigned> f;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      ++f[p];
      n /= p;
    }
  if (n > 1) ++f[n];
  return f;
}

inline std::uint64_t gcd_count_totient(std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) ++count;
  return count;
}

/// Smallest r > 0 with 2^r == 1 (mod q) by repeated multiplication.
inline std::uint64_t brute_order2(std::uint64_t q) {
  std::uint64_t x = 1;
  for (std::uint64_t r = 1;; ++r) {
    x = x * 2 % q;
    if (x == 1) return r;
  }
}

/// Power of two dividing n, by repeated division.
inline unsigned divide_out_twos(std::uint64_t n) {
  unsigned t = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++t;
  }
  return t;
}

/// (p-1)!/(k!(p-k)!) via Pascal's triangle row p, then divided by p.
inline unsigned __int128 pascal_cycle_count(unsigned p, unsigned k) {
  std::vector<unsigned __int128> row{1};
  for (unsigned n = 1; n <= p; ++n) {
    std::vector<unsigned __int128> next(n + 1, 1);
    for (unsigned j = 1; j < n; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row[k] / p;
}

/// Cycles of q as sets of elements, found by following (q + a) / 2 repeatedly
/// until odd. Order: by least element.
inline std::vector<std::vector<std::uint64_t>> naive_cycles(std::uint64_t q) {
  auto next = [q](std::uint64_t a) {
    std::uint64_t x = q + a;
    while (x % 2 == 0) x /= 2;
    return x;
  };
  std::set<std::uint64_t> seen;
  std::vector<std::vector<std::uint64_t>> out;
  for (std::uint64_t a = 1; a < q; a += 2) {
    if (seen.count(a)) continue;
    std::vector<std::uint64_t> c{a};
    seen.insert(a);
    for (std::uint64_t x = next(a); x != a; x = next(x)) {
      c.push_back(x);
      seen.insert(x);
    }
    out.push_back(c);
  }
  return out;
}

inline std::map<std::uint64_t, std::uint64_t> naive_histogram(std::uint64_t q) {
  std::map<std::uint64_t, std::uint64_t> h;
  for (const auto& c : naive_cycles(q)) ++h[c.size()];
  return h;
}

}  // namespace oddcycles::testing
