// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Time limits are part of the criteria and are enforced.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "oddcycles/arith.hpp"
#include "oddcycles/cli/app.hpp"
#include "oddcycles/cli/sweep.hpp"
#include "oddcycles/conjectures.hpp"
#include "oddcycles/cycles.hpp"
#include "oddcycles/group.hpp"
#include "support/reference_tables.hpp"

namespace {

using namespace oddcycles;

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

int failures = 0;

void criterion(int id, const char* title, std::optional<double> limit_s,
               const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (o.ok && limit_s && secs >= *limit_s) {
    std::ostringstream why;
    why << "took " << secs << " s, limit " << *limit_s << " s";
    o.fail(why.str());
  }
  if (!o.ok) ++failures;
  std::printf("[%s] AC%-2d %-46s %9.3f s", o.ok ? "PASS" : "FAIL", id, title, secs);
  if (limit_s) std::printf(" (limit %g s)", *limit_s);
  if (!o.detail.empty()) std::printf("  %s", o.detail.c_str());
  std::printf("\n");
  std::fflush(stdout);
}

std::vector<std::vector<u64>> sorted_lists(std::vector<std::vector<u64>> lists) {
  std::sort(lists.begin(), lists.end());
  return lists;
}

std::vector<std::vector<u64>> element_lists(const CycleDecomposition& d) {
  std::vector<std::vector<u64>> out;
  for (const auto& c : d.cycles) out.push_back(c.elements);
  return out;
}

Outcome golden_tables() {
  Outcome o;
  for (const auto& [q, reference] : testing::reference_cycle_tables()) {
    const auto ours = sorted_lists(element_lists(decompose(OddModulus(q))));
    if (ours != sorted_lists(reference)) o.fail("mismatch at q=" + std::to_string(q));
  }
  o.detail = o.ok ? std::to_string(testing::reference_cycle_tables().size()) + " moduli" : o.detail;
  return o;
}

Outcome cycles_641() {
  Outcome o;
  const auto d = decompose(OddModulus(641));
  if (d.cycles.size() != 10) o.fail("cycle count " + std::to_string(d.cycles.size()));
  for (const auto& c : d.cycles)
    if (c.length != 32) o.fail("cycle of length " + std::to_string(c.length));
  for (const auto& reference : testing::reference_641_cycles()) {
    if (std::none_of(d.cycles.begin(), d.cycles.end(),
                     [&](const Cycle& c) { return c.elements == reference; }))
      o.fail("reference cycle at " + std::to_string(reference.front()) + " missing");
  }
  return o;
}

// AC3 to AC5 share one sweep; the checks are tallied separately.
struct SweepTally {
  u64 moduli = 0;
  u64 order_fail = 0, tau_fail = 0, prop3_fail = 0, skipped = 0;
  std::string first_failure;
  double seconds = 0;
};

SweepTally run_dense_sweep() {
  cli::SweepConfig config;
  config.lo = 3;
  config.hi = 100'000;
  config.hi -= config.hi % 2 == 0;
  config.checks = cli::CheckSet::parse("order,tau,prop3");
  config.workers = 1;
  SweepTally t;
  const auto start = std::chrono::steady_clock::now();
  cli::run_sweep(config, [&](const cli::SweepResult& r) {
    ++t.moduli;
    for (const auto& c : r.outcomes) {
      if (c.status == cli::Status::kSkipped) ++t.skipped;
      if (c.status != cli::Status::kFail) continue;
      if (c.check == cli::Check::kOrder) ++t.order_fail;
      if (c.check == cli::Check::kTau) ++t.tau_fail;
      if (c.check == cli::Check::kProp3) ++t.prop3_fail;
      if (t.first_failure.empty())
        t.first_failure = "q=" + std::to_string(r.q) + " " + c.detail;
    }
  });
  t.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return t;
}

Outcome tally(const SweepTally& t, u64 fails, u64 skipped, double limit) {
  Outcome o;
  if (t.moduli != 49'999) o.fail("swept " + std::to_string(t.moduli) + " moduli");
  if (fails) o.fail(std::to_string(fails) + " mismatches, first " + t.first_failure);
  if (skipped) o.fail(std::to_string(skipped) + " skipped");
  if (t.seconds >= limit) o.fail("sweep took " + std::to_string(t.seconds) + " s");
  if (o.ok) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "49999 moduli, shared sweep %.3f s (limit %g s)", t.seconds,
                  limit);
    o.detail = buf;
  }
  return o;
}

Outcome group_axioms() {
  Outcome o;
  u64 exhaustive = 0;
  for (u64 q = 3; q <= 501; q += 2) {
    AxiomCheckOptions opts;
    opts.mode = AxiomMode::kExhaustive;
    opts.triple_budget = 250ull * 250 * 250;
    const auto r = verify_group_axioms(OddModulus(q), opts);
    if (!r.passed()) o.fail("exhaustive failure at q=" + std::to_string(q));
    ++exhaustive;
  }
  std::mt19937_64 rng(0);
  std::set<u64> moduli;
  while (moduli.size() < 100) moduli.insert(3 + 2 * (rng() % ((100'000 - 3) / 2)));
  for (u64 q : moduli) {
    AxiomCheckOptions opts;
    opts.mode = AxiomMode::kSampled;
    opts.samples = 10'000;
    opts.seed = 0;
    const auto r = verify_group_axioms(OddModulus(q), opts);
    if (!r.passed()) o.fail("sampled failure at q=" + std::to_string(q));
  }
  if (o.ok)
    o.detail = std::to_string(exhaustive) + " exhaustive, 100 sampled x 10^4 triples (seed 0)";
  return o;
}

Outcome mersenne_tables() {
  Outcome o;
  for (const auto& [p, counts] : testing::reference_mersenne_counts()) {
    const auto r = check_mersenne_counts(p);
    if (!r.passed()) o.fail("M_" + std::to_string(p) + " verdict fail");
    u64 total = 0;
    for (u64 k = 1; k < p; ++k) {
      total += counts[k - 1];
      if (r.histogram.count(k) != counts[k - 1])
        o.fail("M_" + std::to_string(p) + " N_" + std::to_string(k));
    }
    if (r.histogram.cycles() != total) o.fail("M_" + std::to_string(p) + " extra lengths");
  }
  for (u64 p : {17, 19}) {
    const auto r = check_mersenne_counts(p);
    if (!r.passed()) o.fail("M_" + std::to_string(p) + " verdict fail");
    for (u64 k = 1; k < p; ++k)
      if (r.histogram.count(k) != cycle_count_formula(p, k))
        o.fail("M_" + std::to_string(p) + " N_" + std::to_string(k));
  }
  return o;
}

Outcome fermat_cycles() {
  Outcome o;
  for (unsigned n = 0; n <= 4; ++n)
    if (!check_fermat_cycles(OddModulus(fermat_number(n)), n).passed())
      o.fail("F_" + std::to_string(n));
  for (u64 d : {641ull, 6'700'417ull})
    if (!check_fermat_cycles(OddModulus(d), 5).passed()) o.fail(std::to_string(d));
  const auto start = std::chrono::steady_clock::now();
  const auto f5 = check_fermat_cycles(OddModulus(fermat_number(5)), 5, u64{8} << 30);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!f5.passed()) o.fail("F_5 itself");
  if (o.ok) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "F_5 full decomposition %.3f s", secs);
    o.detail = buf;
  }
  return o;
}

Outcome screening() {
  Outcome o;
  auto audit = [&](const ScreenResult& r) {
    const u64 number = r.target.number();
    for (const auto& c : r.candidates)
      if (c.divides_target != (number % c.d == 0))
        o.fail("divisibility flag wrong at " + std::to_string(c.d));
    for (const auto& v : r.violations)
      o.fail("finding: " + std::to_string(v.d) + " breaks the criterion for " + r.target.label());
    if (!r.refusals.empty()) o.fail("refusals in " + r.target.label());
  };
  const auto m = screen(3, 100, ConjectureTarget::mersenne(11));
  audit(m);
  std::set<u64> got;
  for (const auto& c : m.candidates) got.insert(c.d);
  if (got != std::set<u64>{23, 89}) o.fail("M_11 candidates differ from {23, 89}");

  const auto f = screen(3, 700, ConjectureTarget::fermat(5));
  audit(f);
  if (std::none_of(f.candidates.begin(), f.candidates.end(),
                   [](const ScreenCandidate& c) { return c.d == 641; }))
    o.fail("641 not among F_5 candidates");
  return o;
}

Outcome determinism() {
  Outcome o;
  auto capture = [](const char* workers, int& code) {
    std::ostringstream out, err;
    code = cli::run({"oddcycles", "--json", "sweep", "3", "9999", "--workers", workers}, out, err);
    return out.str();
  };
  int c1 = -1, c8 = -1;
  const std::string one = capture("1", c1);
  const std::string eight = capture("8", c8);
  if (c1 != 0 || c8 != 0) o.fail("nonzero exit");
  if (one.empty()) o.fail("empty output");
  if (one != eight) o.fail("outputs differ");
  if (o.ok) o.detail = std::to_string(one.size()) + " identical bytes";
  return o;
}

}  // namespace

int main() {
  criterion(1, "golden cycle tables", 1.0, golden_tables);
  criterion(2, "641 cycles", 1.0, cycles_641);

  const SweepTally t = run_dense_sweep();
  criterion(3, "epsilon == order of 2, odd q in [3, 10^5]", std::nullopt,
            [&] { return tally(t, t.order_fail, 0, 60.0); });
  criterion(4, "tau sum identity, odd q in [3, 10^5]", std::nullopt,
            [&] { return tally(t, t.tau_fail, 0, 60.0); });
  criterion(5, "irreducible count == phi/epsilon, q <= 10^5", std::nullopt,
            [&] { return tally(t, t.prop3_fail, t.skipped, 60.0); });

  criterion(6, "group axioms (exhaustive q <= 501, sampled)", std::nullopt, group_axioms);
  criterion(7, "Mersenne k-cycle counts, p <= 19", 120.0, mersenne_tables);
  criterion(8, "Fermat cycle lengths incl. F_5", std::nullopt, fermat_cycles);
  criterion(9, "screening ground truth", std::nullopt, screening);
  criterion(10, "sweep --json identical for 1 and 8 workers", std::nullopt, determinism);

  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
