#include "oddcycles/cli/sweep.hpp"

#include <algorithm>
#include <sstream>

#include "oddcycles/arith.hpp"
#include "oddcycles/cycles.hpp"
#include "oddcycles/errors.hpp"
#include "oddcycles/group.hpp"
#include "oddcycles/parallel.hpp"

namespace oddcycles::cli {

namespace {

constexpr Check kOrdered[] = {Check::kOrder, Check::kTau, Check::kProp3, Check::kGroup};

CheckOutcome check_order(const OddModulus& q) {
  const u64 eps = epsilon(q);
  const u64 oracle = order2_oracle(q);
  std::ostringstream d;
  d << "epsilon=" << eps << " oracle=" << oracle;
  return {Check::kOrder, eps == oracle ? Status::kPass : Status::kFail, d.str()};
}

CheckOutcome check_tau(const OddModulus& q) {
  const TauSum t = tau_sum_identity(q);
  const u64 legendre = legendre_tau_ratio(q);
  std::ostringstream d;
  d << "sum=" << t.lhs << " legendre=" << legendre << " q-1=" << q.value() - 1;
  const bool ok = t.holds && t.lhs == legendre;
  return {Check::kTau, ok ? Status::kPass : Status::kFail, d.str()};
}

CheckOutcome check_prop3(const OddModulus& q, const SweepConfig& config) {
  try {
    const DecompositionSummary s = summarize(q, config.max_memory);
    const u64 phi = euler_totient(q);
    std::ostringstream d;
    d << "irreducible=" << s.irreducible_count << " phi=" << phi << " epsilon=" << s.epsilon;
    const bool ok = phi % s.epsilon == 0 && s.irreducible_count == phi / s.epsilon &&
                    s.covered == q.odd_count() && s.irreducible_xi_constant;
    return {Check::kProp3, ok ? Status::kPass : Status::kFail, d.str()};
  } catch (const BudgetExceeded& e) {
    return {Check::kProp3, Status::kSkipped, e.what()};
  }
}

CheckOutcome check_group(const OddModulus& q, const SweepConfig& config) {
  AxiomCheckOptions opts;
  opts.mode = AxiomMode::kSampled;
  opts.samples = config.group_samples;
  opts.seed = config.seed;
  opts.max_memory = config.max_memory;
  try {
    const AxiomReport r = verify_group_axioms(q, opts);
    std::ostringstream d;
    d << "classes=" << r.class_count << " samples=" << config.group_samples;
    for (const auto& a : r.axioms) {
      if (!a.passed) {
        d << " " << a.name << ": " << a.witness.value_or("failed");
        break;
      }
    }
    return {Check::kGroup, r.passed() ? Status::kPass : Status::kFail, d.str()};
  } catch (const BudgetExceeded& e) {
    return {Check::kGroup, Status::kSkipped, e.what()};
  }
}

}  // namespace

CheckSet CheckSet::parse(const std::string& list) {
  CheckSet out;
  std::istringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item == "all") {
      out = all();
    } else if (item == "order") {
      out.add(Check::kOrder);
    } else if (item == "tau") {
      out.add(Check::kTau);
    } else if (item == "prop3") {
      out.add(Check::kProp3);
    } else if (item == "group") {
      out.add(Check::kGroup);
    } else {
      throw DomainError("unknown check '" + item + "' (expected order, tau, prop3, group, all)");
    }
  }
  if (out.empty()) throw DomainError("empty check list");
  return out;
}

std::vector<Check> CheckSet::members() const {
  std::vector<Check> out;
  for (Check c : kOrdered)
    if (has(c)) out.push_back(c);
  return out;
}

std::string check_name(Check c) {
  switch (c) {
    case Check::kOrder:
      return "order";
    case Check::kTau:
      return "tau";
    case Check::kProp3:
      return "prop3";
    case Check::kGroup:
      return "group";
  }
  return "?";
}

std::string status_name(Status s) {
  switch (s) {
    case Status::kPass:
      return "pass";
    case Status::kFail:
      return "fail";
    case Status::kSkipped:
      return "skipped";
  }
  return "?";
}

bool SweepResult::failed() const {
  return std::any_of(outcomes.begin(), outcomes.end(),
                     [](const CheckOutcome& o) { return o.status == Status::kFail; });
}

SweepResult evaluate(const OddModulus& q, const SweepConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  SweepResult r;
  r.q = q.value();
  for (Check c : config.checks.members()) {
    switch (c) {
      case Check::kOrder:
        r.outcomes.push_back(check_order(q));
        break;
      case Check::kTau:
        r.outcomes.push_back(check_tau(q));
        break;
      case Check::kProp3:
        r.outcomes.push_back(check_prop3(q, config));
        break;
      case Check::kGroup:
        r.outcomes.push_back(check_group(q, config));
        break;
    }
    const auto& o = r.outcomes.back();
    if (o.status == Status::kFail && !r.first_failure)
      r.first_failure = check_name(c) + ": " + o.detail;
  }
  r.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::steady_clock::now() - start);
  return r;
}

SweepSummary run_sweep(const SweepConfig& config,
                       const std::function<void(const SweepResult&)>& sink) {
  if (config.lo > config.hi || config.lo < 3 || (config.lo & 1) == 0 || (config.hi & 1) == 0) {
    throw DomainError("sweep range must satisfy 3 <= lo <= hi with both bounds odd");
  }
  if (config.hi > OddModulus::kMax) throw DomainError("sweep range exceeds the modulus limit");

  SweepSummary summary;
  const u64 total = (config.hi - config.lo) / 2 + 1;
  constexpr u64 kBlock = 1024;
  for (u64 base = 0; base < total; base += kBlock) {
    const u64 count = std::min(kBlock, total - base);
    const auto block = parallel_map<SweepResult>(count, config.workers, [&](std::size_t i) {
      return evaluate(OddModulus(config.lo + 2 * (base + i)), config);
    });
    for (const auto& r : block) {
      ++summary.total;
      if (r.failed()) {
        ++summary.failed;
      } else if (std::any_of(r.outcomes.begin(), r.outcomes.end(),
                             [](const CheckOutcome& o) { return o.status == Status::kSkipped; })) {
        ++summary.skipped;
      } else {
        ++summary.passed;
      }
      sink(r);
    }
  }
  return summary;
}

}  // namespace oddcycles::cli
