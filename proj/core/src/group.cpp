#include "oddcycles/group.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "oddcycles/arith.hpp"
#include "oddcycles/cycles.hpp"
#include "oddcycles/errors.hpp"

namespace oddcycles {

namespace {

void require_unit(const OddModulus& q, u64 a) {
  q.require_residue(a);
  if (std::gcd(a, q.value()) != 1) {
    throw DomainError(std::to_string(a) + " is not coprime to " + std::to_string(q.value()));
  }
}

inline u64 odd_part(u64 x) { return x >> std::countr_zero(x); }

inline u64 star_unchecked(u64 q, u64 a, u64 b) {
  return odd_part(static_cast<u64>(static_cast<u128>(a) * b % q));
}

u64 inverse_mod(u64 a, u64 m) {
  __extension__ typedef __int128 i128;
  i128 old_r = a, r = m, old_s = 1, s = 0;
  while (r != 0) {
    const i128 quot = old_r / r;
    i128 tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
  }
  i128 inv = old_s % static_cast<i128>(m);
  if (inv < 0) inv += m;
  return static_cast<u64>(inv);
}

}  // namespace

StarResult star_with_shift(const OddModulus& q, u64 a, u64 b) {
  require_unit(q, a);
  require_unit(q, b);
  // ab - sq with s = floor(ab / q); nonzero because q does not divide ab.
  const u64 r = static_cast<u64>(static_cast<u128>(a) * b % q.value());
  const unsigned t = static_cast<unsigned>(std::countr_zero(r));
  return {r >> t, t};
}

u64 star(const OddModulus& q, u64 a, u64 b) { return star_with_shift(q, a, b).value; }

ClassRep class_of(const OddModulus& q, u64 x) {
  require_unit(q, x);
  const u64 qv = q.value();
  u64 least = x;
  u64 y = x;
  do {
    y = odd_part(qv + y);
    least = std::min(least, y);
  } while (y != x);
  return {q, least};
}

ClassIndex::ClassIndex(const OddModulus& q) : q_(q), slot_class_(q.odd_count(), kNone) {
  const u64 qv = q.value();
  for (u64 seed = 1; seed < qv; seed += 2) {
    if (std::gcd(seed, qv) != 1) continue;
    units_.push_back(seed);
    if (slot_class_[(seed - 1) / 2] != kNone) continue;
    const auto index = static_cast<std::uint32_t>(reps_.size());
    u64 length = 0;
    u64 x = seed;
    do {
      slot_class_[(x - 1) / 2] = index;
      ++length;
      x = odd_part(qv + x);
    } while (x != seed);
    reps_.push_back(seed);
    lengths_.push_back(length);
  }
}

std::uint32_t ClassIndex::index_of(u64 x) const noexcept {
  if (!q_.contains(x)) return kNone;
  return slot_class_[(x - 1) / 2];
}

u64 ClassIndex::bytes_for(const OddModulus& q) {
  return q.odd_count() * (sizeof(std::uint32_t) + sizeof(u64));
}

CayleyTable::CayleyTable(std::size_t order, std::vector<std::uint32_t> entries)
    : order_(order), entries_(std::move(entries)) {}

QuotientGroup quotient_group(const OddModulus& q, bool with_table, std::size_t table_cap) {
  const ClassIndex index(q);
  QuotientGroup out{q, index.reps(), std::nullopt, std::nullopt};
  if (!with_table) return out;

  const std::size_t n = index.size();
  if (n > table_cap) {
    out.notice = "Cayley table omitted: " + std::to_string(n) + " classes exceeds cap " +
                 std::to_string(table_cap);
    return out;
  }
  std::vector<std::uint32_t> entries(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      entries[i * n + j] = index.index_of(star_unchecked(q.value(), out.reps[i], out.reps[j]));
  out.table.emplace(n, std::move(entries));
  return out;
}

bool AxiomReport::passed() const noexcept {
  return std::all_of(axioms.begin(), axioms.end(), [](const AxiomResult& a) { return a.passed; });
}

namespace {

struct AxiomChecker {
  const ClassIndex& index;
  u64 q;
  AxiomReport& report;

  AxiomResult& axiom(std::size_t i) { return report.axioms[i]; }
  std::uint32_t cls(u64 x) const { return index.index_of(x); }
  u64 mul(u64 a, u64 b) const { return star_unchecked(q, a, b); }

  static void fail(AxiomResult& r, const std::string& witness) {
    if (r.passed) {
      r.passed = false;
      r.witness = witness;
    }
  }

  void well_defined(u64 a, u64 a2, u64 b) {
    auto& r = axiom(0);
    ++r.trials;
    if (cls(mul(a, b)) != cls(mul(a2, b))) {
      std::ostringstream w;
      w << "a=" << a << " ~ a'=" << a2 << ", b=" << b << ": class(a*b) != class(a'*b)";
      fail(r, w.str());
    }
  }

  void associative(u64 a, u64 b, u64 c) {
    const u64 left = mul(mul(a, b), c);
    const u64 right = mul(a, mul(b, c));
    auto& r = axiom(1);
    ++r.trials;
    if (cls(left) != cls(right)) {
      std::ostringstream w;
      w << "a=" << a << " b=" << b << " c=" << c << ": (a*b)*c=" << left
        << " and a*(b*c)=" << right << " lie in different classes";
      fail(r, w.str());
    }
    if (left != right) {
      ++report.element_associativity_failures;
      if (report.element_associative) {
        report.element_associative = false;
        std::ostringstream w;
        w << "a=" << a << " b=" << b << " c=" << c << ": (a*b)*c=" << left
          << ", a*(b*c)=" << right;
        report.element_associativity_witness = w.str();
      }
    }
  }

  void commutative(u64 a, u64 b) {
    auto& r = axiom(2);
    ++r.trials;
    if (mul(a, b) != mul(b, a)) {
      std::ostringstream w;
      w << "a=" << a << " b=" << b << ": a*b=" << mul(a, b) << ", b*a=" << mul(b, a);
      fail(r, w.str());
    }
  }

  void identity(u64 b) {
    auto& r = axiom(3);
    ++r.trials;
    const u64 v = mul(1, b);
    if (v != b || cls(v) != cls(b)) {
      std::ostringstream w;
      w << "1*" << b << "=" << v;
      fail(r, w.str());
    }
  }
};

// Exhaustive pair/triple checks over a precomputed product table of units;
// results are identical to running AxiomChecker on every pair and triple.
void exhaustive_with_table(const ClassIndex& index, u64 q, AxiomReport& report) {
  const auto& us = index.units();
  const std::size_t n = us.size();
  std::vector<std::uint32_t> unit_pos(index.modulus().odd_count(), ClassIndex::kNone);
  for (std::size_t i = 0; i < n; ++i) unit_pos[(us[i] - 1) / 2] = static_cast<std::uint32_t>(i);

  std::vector<std::uint32_t> product(n * n);
  std::vector<std::uint32_t> cls(n);
  for (std::size_t i = 0; i < n; ++i) {
    cls[i] = index.index_of(us[i]);
    for (std::size_t j = 0; j < n; ++j)
      product[i * n + j] = unit_pos[(star_unchecked(q, us[i], us[j]) - 1) / 2];
  }
  auto P = [&](std::size_t i, std::size_t j) { return product[i * n + j]; };

  AxiomChecker check{index, q, report};
  auto& wd = report.axioms[0];
  auto& assoc = report.axioms[1];
  auto& comm = report.axioms[2];
  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t ra = unit_pos[(index.reps()[cls[a]] - 1) / 2];
    for (std::size_t b = 0; b < n; ++b) {
      if (cls[P(a, b)] == cls[P(ra, b)])
        ++wd.trials;
      else
        check.well_defined(us[a], us[ra], us[b]);
      if (P(a, b) == P(b, a))
        ++comm.trials;
      else
        check.commutative(us[a], us[b]);
      const std::uint32_t ab = P(a, b);
      for (std::size_t c = 0; c < n; ++c) {
        const std::uint32_t left = P(ab, c);
        const std::uint32_t right = P(a, P(b, c));
        if (left == right) {
          ++assoc.trials;
        } else if (cls[left] == cls[right]) {
          ++assoc.trials;
          ++report.element_associativity_failures;
          if (report.element_associative) {
            report.element_associative = false;
            std::ostringstream w;
            w << "a=" << us[a] << " b=" << us[b] << " c=" << us[c] << ": (a*b)*c=" << us[left]
              << ", a*(b*c)=" << us[right];
            report.element_associativity_witness = w.str();
          }
        } else {
          check.associative(us[a], us[b], us[c]);
        }
      }
    }
  }
  for (u64 b : us) check.identity(b);
}

}  // namespace

AxiomReport verify_group_axioms(const OddModulus& q, const AxiomCheckOptions& options) {
  const u64 units = euler_totient(q) / 2;
  const u128 triples = static_cast<u128>(units) * units * units;
  const u64 triples_clamped = static_cast<u64>(std::min<u128>(triples, ~u64{0}));

  AxiomMode mode = options.mode;
  if (mode == AxiomMode::kAuto)
    mode = triples <= options.triple_budget ? AxiomMode::kExhaustive : AxiomMode::kSampled;
  if (mode == AxiomMode::kExhaustive && triples > options.triple_budget) {
    throw BudgetExceeded("exhaustive axiom check of q=" + std::to_string(q.value()) + " needs " +
                             std::to_string(triples_clamped) + " triples; budget is " +
                             std::to_string(options.triple_budget),
                         triples_clamped, options.triple_budget);
  }
  const u64 bytes = ClassIndex::bytes_for(q);
  if (bytes > options.max_memory) {
    throw BudgetExceeded("class index of q=" + std::to_string(q.value()) + " needs " +
                             std::to_string(bytes) + " bytes",
                         bytes, options.max_memory);
  }

  const ClassIndex index(q);
  AxiomReport report{q, mode, index.size(), {}, true, 0, std::nullopt};
  for (const char* name : {"well_defined", "associative", "commutative", "identity", "inverse"})
    report.axioms.push_back({name, true, 0, std::nullopt});

  AxiomChecker check{index, q.value(), report};
  const auto& us = index.units();
  const auto& reps = index.reps();
  const std::uint32_t one = index.index_of(1);

  if (mode == AxiomMode::kExhaustive) {
    const std::size_t n = us.size();
    const u128 table_bytes = static_cast<u128>(n) * n * sizeof(std::uint32_t);
    if (table_bytes <= options.max_memory) {
      exhaustive_with_table(index, q.value(), report);
    } else {
      for (u64 a : us) {
        const u64 ra = reps[index.index_of(a)];
        for (u64 b : us) {
          check.well_defined(a, ra, b);
          check.commutative(a, b);
          for (u64 c : us) check.associative(a, b, c);
        }
      }
      for (u64 b : us) check.identity(b);
    }

    auto& inv = report.axioms[4];
    for (u64 a : reps) {
      ++inv.trials;
      const bool found = std::any_of(reps.begin(), reps.end(), [&](u64 b) {
        return index.index_of(star_unchecked(q.value(), a, b)) == one;
      });
      if (!found) AxiomChecker::fail(inv, "class of " + std::to_string(a) + " has no inverse");
    }
    return report;
  }

  std::mt19937_64 rng(options.seed);
  const u64 n = us.size();
  auto pick = [&] { return us[rng() % n]; };
  for (u64 i = 0; i < options.samples; ++i) {
    const u64 a = pick(), b = pick(), c = pick();
    check.associative(a, b, c);
    check.commutative(a, b);
    check.identity(b);

    u64 a2 = a;
    for (u64 j = rng() % index.class_length(index.index_of(a)); j > 0; --j)
      a2 = odd_part(q.value() + a2);
    check.well_defined(a, a2, b);
  }

  // Inverse by construction: the odd part of a^-1 mod q is a unit whose
  // product with a is a power of two mod q, i.e. lies in the class of 1.
  auto& inv = report.axioms[4];
  const u64 class_checks = std::min<u64>(reps.size(), std::max<u64>(options.samples, 1));
  for (u64 i = 0; i < class_checks; ++i) {
    const u64 a = reps.size() == class_checks ? reps[i] : reps[rng() % reps.size()];
    ++inv.trials;
    const u64 b = odd_part(inverse_mod(a, q.value()));
    if (index.index_of(star_unchecked(q.value(), a, b)) != one)
      AxiomChecker::fail(inv, "class of " + std::to_string(a) + " has no inverse");
  }
  return report;
}

}  // namespace oddcycles
