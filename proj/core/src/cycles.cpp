#include "oddcycles/cycles.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "oddcycles/arith.hpp"
#include "oddcycles/errors.hpp"

namespace oddcycles {

namespace {

// Successor without range validation; callers guarantee a is a residue.
inline Step step(u64 q, u64 a) {
  const u64 x = q + a;
  const unsigned k = static_cast<unsigned>(std::countr_zero(x));
  return {x >> k, k};
}

// One bit per odd residue x, at slot (x - 1) / 2.
class VisitedBitmap {
 public:
  explicit VisitedBitmap(u64 slots) : words_((slots + 63) / 64, 0) {}

  static u64 bytes_for(u64 slots) { return (slots + 63) / 64 * sizeof(u64); }

  bool test(u64 x) const {
    const u64 s = (x - 1) >> 1;
    return (words_[s >> 6] >> (s & 63)) & 1;
  }
  void set(u64 x) {
    const u64 s = (x - 1) >> 1;
    words_[s >> 6] |= u64{1} << (s & 63);
  }

 private:
  std::vector<u64> words_;
};

// Visits every cycle of q once, seeding in increasing odd order. For each
// cycle, on_element(x, k) is called along the orbit starting at the seed
// (which is the cycle's minimum), then on_cycle(seed, length, xi).
template <class OnElement, class OnCycle>
void walk_cycles(const OddModulus& q, OnElement&& on_element, OnCycle&& on_cycle) {
  const u64 qv = q.value();
  VisitedBitmap visited(q.odd_count());
  for (u64 seed = 1; seed < qv; seed += 2) {
    if (visited.test(seed)) continue;
    u64 x = seed;
    u64 length = 0;
    u64 xi = 0;
    do {
      visited.set(x);
      const Step s = step(qv, x);
      on_element(x, s.exponent);
      ++length;
      xi += s.exponent;
      x = s.next;
    } while (x != seed);
    on_cycle(seed, length, xi);
  }
}

void require_budget(const char* what, const OddModulus& q, u64 required, u64 budget) {
  if (required > budget) {
    throw BudgetExceeded(std::string(what) + " of q=" + std::to_string(q.value()) + " needs " +
                             std::to_string(required) + " bytes; budget is " +
                             std::to_string(budget),
                         required, budget);
  }
}

}  // namespace

Step successor(const OddModulus& q, u64 a) {
  q.require_residue(a);
  return step(q.value(), a);
}

Step predecessor(const OddModulus& q, u64 b) {
  q.require_residue(b);
  const u64 qv = q.value();
  // Smallest k with 2^k * b > q; then 2^k * b < 2q automatically.
  unsigned k = static_cast<unsigned>(std::bit_width(qv) - std::bit_width(b));
  if ((b << k) < qv) ++k;
  return {(b << k) - qv, k};
}

void LengthHistogram::add(u64 length, u64 count) {
  if (count > 0) counts_[length] += count;
}

u64 LengthHistogram::count(u64 length) const {
  const auto it = counts_.find(length);
  return it == counts_.end() ? 0 : it->second;
}

u64 LengthHistogram::covered() const {
  u64 total = 0;
  for (const auto& [k, n] : counts_) total += k * n;
  return total;
}

u64 LengthHistogram::cycles() const {
  u64 total = 0;
  for (const auto& [k, n] : counts_) total += n;
  return total;
}

Cycle cycle_from(const OddModulus& q, u64 a) {
  q.require_residue(a);
  const u64 qv = q.value();
  Cycle c;
  u64 x = a;
  do {
    const Step s = step(qv, x);
    c.elements.push_back(x);
    c.steps.push_back(static_cast<std::uint8_t>(s.exponent));
    c.xi += s.exponent;
    x = s.next;
  } while (x != a);
  const auto min_it = std::min_element(c.elements.begin(), c.elements.end());
  const auto offset = min_it - c.elements.begin();
  std::rotate(c.elements.begin(), min_it, c.elements.end());
  std::rotate(c.steps.begin(), c.steps.begin() + offset, c.steps.end());
  c.min = c.elements.front();
  c.length = c.elements.size();
  c.gcd_with_q = std::gcd(a, qv);
  return c;
}

u64 cycle_xi(const OddModulus& q, u64 a) {
  q.require_residue(a);
  const u64 qv = q.value();
  u64 xi = 0;
  u64 x = a;
  do {
    const Step s = step(qv, x);
    xi += s.exponent;
    x = s.next;
  } while (x != a);
  return xi;
}

u64 epsilon(const OddModulus& q) { return cycle_xi(q, 1); }

TauSum tau_sum_identity(const OddModulus& q) {
  const u64 qv = q.value();
  u64 lhs = 0;
  for (u64 x = 1; x < qv; x += 2) lhs += static_cast<u64>(std::countr_zero(qv + x));
  return {lhs, lhs == qv - 1};
}

u64 expected_cycle_count(const OddModulus& q) {
  u64 total = 0;
  for (u64 d : factorize(q.value()).divisors()) {
    if (d == 1) continue;
    const OddModulus m(d);
    total += euler_totient(m) / order2_oracle(m);
  }
  return total;
}

u64 decomposition_bytes(const OddModulus& q, const DecomposeOptions& options) {
  const u64 slots = q.odd_count();
  const u64 cycles = expected_cycle_count(q);
  const u64 per_element = sizeof(u64) + sizeof(std::uint8_t);
  u64 stored = slots;
  if (!options.keep_elements && q.value() > options.small_modulus) {
    const u128 cap = static_cast<u128>(cycles) * options.element_length_threshold;
    stored = static_cast<u64>(std::min<u128>(cap, slots));
  }
  const u128 total = static_cast<u128>(VisitedBitmap::bytes_for(slots)) +
                     static_cast<u128>(cycles) * sizeof(Cycle) +
                     static_cast<u128>(stored) * per_element;
  return static_cast<u64>(std::min<u128>(total, ~u64{0}));
}

CycleDecomposition decompose(const OddModulus& q, const DecomposeOptions& options) {
  require_budget("decomposition", q, decomposition_bytes(q, options), options.max_memory);

  CycleDecomposition out{.q = q};
  out.phi = euler_totient(q);
  const bool keep_all = options.keep_elements || q.value() <= options.small_modulus;
  const u64 limit = options.element_length_threshold;

  std::vector<u64> elements;
  std::vector<std::uint8_t> steps;
  bool overflowed = false;

  walk_cycles(
      q,
      [&](u64 x, unsigned k) {
        if (overflowed) return;
        if (!keep_all && elements.size() >= limit) {
          overflowed = true;
          elements.clear();
          steps.clear();
          return;
        }
        elements.push_back(x);
        steps.push_back(static_cast<std::uint8_t>(k));
      },
      [&](u64 seed, u64 length, u64 xi) {
        Cycle c;
        c.min = seed;
        c.length = length;
        c.xi = xi;
        c.gcd_with_q = std::gcd(seed, q.value());
        if (!overflowed) {
          c.elements = std::move(elements);
          c.steps = std::move(steps);
        }
        elements = {};
        steps = {};
        overflowed = false;

        if (out.cycles.empty()) out.epsilon = xi;  // seed 1 comes first
        out.histogram.add(length);
        if (c.irreducible()) {
          ++out.irreducible_count;
          out.irreducible_histogram.add(length);
        }
        out.cycles.push_back(std::move(c));
      });
  return out;
}

u64 summary_bytes(const OddModulus& q) { return VisitedBitmap::bytes_for(q.odd_count()); }

DecompositionSummary summarize(const OddModulus& q, u64 max_memory) {
  require_budget("summary", q, summary_bytes(q), max_memory);

  DecompositionSummary out{.q = q};
  const u64 qv = q.value();
  walk_cycles(
      q, [](u64, unsigned) {},
      [&](u64 seed, u64 length, u64 xi) {
        if (out.cycle_count == 0) out.epsilon = xi;
        ++out.cycle_count;
        out.covered += length;
        out.xi_total += xi;
        out.histogram.add(length);
        if (std::gcd(seed, qv) == 1) {
          ++out.irreducible_count;
          out.irreducible_histogram.add(length);
          if (xi != out.epsilon) out.irreducible_xi_constant = false;
        }
      });
  return out;
}

}  // namespace oddcycles
