#include "oddcycles/conjectures.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <string>

#include "oddcycles/arith.hpp"
#include "oddcycles/errors.hpp"
#include "oddcycles/parallel.hpp"

namespace oddcycles {

namespace {

constexpr unsigned kMaxFermatIndex = 5;
constexpr u64 kMaxMersenneExponent = 62;

using Clock = std::chrono::steady_clock;

void finish(ConjectureReport& report, Clock::time_point start) {
  report.verdict = report.first_violation ? Verdict::kFail : Verdict::kPass;
  report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
}

}  // namespace

u64 fermat_number(unsigned n) {
  if (n > kMaxFermatIndex) {
    throw DomainError("F_" + std::to_string(n) + " exceeds the supported range (n <= 5)");
  }
  return (u64{1} << (u64{1} << n)) + 1;
}

u64 mersenne_number(u64 p) {
  if (!is_prime(p)) {
    throw DomainError(std::to_string(p) + " is not prime; Mersenne numbers use prime exponents");
  }
  if (p > kMaxMersenneExponent) {
    throw DomainError("M_" + std::to_string(p) + " exceeds the modulus limit");
  }
  return (u64{1} << p) - 1;
}

ConjectureTarget ConjectureTarget::fermat(unsigned n) {
  fermat_number(n);
  return {Kind::kFermat, n};
}

ConjectureTarget ConjectureTarget::mersenne(u64 p) {
  mersenne_number(p);
  return {Kind::kMersenne, p};
}

u64 ConjectureTarget::number() const {
  return kind == Kind::kFermat ? fermat_number(static_cast<unsigned>(index))
                               : mersenne_number(index);
}

u64 ConjectureTarget::divisor_order() const {
  return kind == Kind::kFermat ? u64{2} << index : index;
}

std::string ConjectureTarget::label() const {
  return (kind == Kind::kFermat ? "F_" : "M_") + std::to_string(index);
}

std::string describe(const Witness& w) {
  std::ostringstream out;
  if (const auto* len = std::get_if<LengthWitness>(&w)) {
    out << len->count << " cycle(s) of length " << len->length;
  } else {
    const auto& c = std::get<CountWitness>(w);
    out << "N_" << c.k << " = " << c.observed << ", expected " << c.expected;
  }
  return out.str();
}

ConjectureReport check_fermat_cycles(const OddModulus& d, unsigned n, u64 max_memory) {
  const auto start = Clock::now();
  ConjectureReport report;
  report.subject = d.value();
  report.target = ConjectureTarget::fermat(n);

  const DecompositionSummary summary = summarize(d, max_memory);
  report.histogram = summary.histogram;
  const u64 length = u64{1} << n;
  report.expected.emplace_back(length, d.odd_count() / length);
  for (const auto& [k, count] : summary.histogram.entries()) {
    if (k != length) {
      report.first_violation = LengthWitness{k, count};
      break;
    }
  }
  finish(report, start);
  return report;
}

ConjectureReport check_mersenne_counts(u64 p, u64 max_memory) {
  const auto start = Clock::now();
  ConjectureReport report;
  report.target = ConjectureTarget::mersenne(p);
  report.subject = report.target.number();

  const DecompositionSummary summary = summarize(OddModulus(report.subject), max_memory);
  report.histogram = summary.histogram;
  for (u64 k = 1; k < p; ++k) report.expected.emplace_back(k, cycle_count_formula(p, k));

  // Walk the union of observed and expected lengths in ascending order.
  std::map<u64, u64> expected(report.expected.begin(), report.expected.end());
  std::map<u64, u64> lengths = expected;
  for (const auto& [k, count] : summary.histogram.entries()) lengths.emplace(k, 0);
  for (const auto& [k, unused] : lengths) {
    const auto it = expected.find(k);
    const u64 want = it == expected.end() ? 0 : it->second;
    const u64 got = summary.histogram.count(k);
    if (got != want) {
      report.first_violation = CountWitness{k, got, want};
      break;
    }
  }
  finish(report, start);
  return report;
}

ConjectureReport check_mersenne_symmetry(const OddModulus& d, u64 p, u64 max_memory) {
  const auto start = Clock::now();
  ConjectureReport report;
  report.subject = d.value();
  report.target = ConjectureTarget::mersenne(p);

  const DecompositionSummary summary = summarize(d, max_memory);
  report.histogram = summary.histogram;
  for (const auto& [k, count] : summary.histogram.entries()) {
    const u64 partner = k < p ? summary.histogram.count(p - k) : 0;
    report.expected.emplace_back(k, partner);
    if (count != partner && !report.first_violation)
      report.first_violation = CountWitness{k, count, partner};
  }
  finish(report, start);
  return report;
}

ConjectureReport check_criterion(const OddModulus& d, const ConjectureTarget& target,
                                 u64 max_memory) {
  if (target.kind == ConjectureTarget::Kind::kFermat)
    return check_fermat_cycles(d, static_cast<unsigned>(target.index), max_memory);
  return check_mersenne_symmetry(d, target.index, max_memory);
}

namespace {

struct ScreenOutcome {
  bool decomposed = false;
  bool refused = false;
  u64 required_bytes = 0;
  bool divides = false;
  std::optional<ConjectureReport> report;
};

}  // namespace

ScreenResult screen(u64 lo, u64 hi, const ConjectureTarget& target, const ScreenOptions& options) {
  if (lo > hi) {
    throw DomainError("empty screening range [" + std::to_string(lo) + ", " + std::to_string(hi) +
                      "]");
  }
  if (hi > OddModulus::kMax) throw DomainError("screening range exceeds the modulus limit");

  ScreenResult result;
  result.lo = lo;
  result.hi = hi;
  result.target = target;
  result.prefilter = options.prefilter;

  const u64 number = target.number();
  const u64 order = target.divisor_order();
  u64 first = std::max<u64>(lo, 3);
  if ((first & 1) == 0) ++first;
  if (first > hi) return result;
  const u64 total = (hi - first) / 2 + 1;

  constexpr u64 kBlock = 4096;
  for (u64 base = 0; base < total; base += kBlock) {
    const u64 count = std::min(kBlock, total - base);
    auto outcomes = parallel_map<ScreenOutcome>(count, options.workers, [&](std::size_t i) {
      const OddModulus d(first + 2 * (base + i));
      ScreenOutcome out;
      out.divides = number % d.value() == 0;
      if (options.prefilter && epsilon(d) != order) return out;
      try {
        out.report = check_criterion(d, target, options.max_memory);
        out.decomposed = true;
      } catch (const BudgetExceeded& e) {
        out.refused = true;
        out.required_bytes = e.required();
      }
      return out;
    });

    for (u64 i = 0; i < count; ++i) {
      const u64 d = first + 2 * (base + i);
      auto& out = outcomes[i];
      ++result.examined;
      if (out.refused) {
        result.refusals.push_back({d, out.required_bytes});
        continue;
      }
      if (!out.decomposed) continue;
      ++result.decomposed;
      const bool passed = out.report->passed();
      if (passed != out.divides)
        result.violations.push_back({d, passed, out.divides, out.report->first_violation});
      if (passed) result.candidates.push_back({d, out.divides, std::move(*out.report)});
    }
  }
  return result;
}

Eq4Identity eq4_identity(u64 p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (p > 64) throw OverflowError("2^p - 2 does not fit 64 bits for p=" + std::to_string(p));
  const u64 lhs = p == 64 ? ~u64{0} : (u64{1} << (p - 1)) - 1;
  u128 rhs = 0;
  for (u64 k = 1; k < p; ++k) rhs += static_cast<u128>(k) * cycle_count_formula(p, k);
  if (rhs > static_cast<u128>(~u64{0}))
    throw OverflowError("right-hand side of the binomial identity overflows for p=" + std::to_string(p));
  return {lhs, static_cast<u64>(rhs), lhs == static_cast<u64>(rhs)};
}

}  // namespace oddcycles
