#include "oddcycles/cli/app.hpp"

#include <cstdlib>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "oddcycles/arith.hpp"
#include "oddcycles/cli/format.hpp"
#include "oddcycles/cli/sweep.hpp"
#include "oddcycles/conjectures.hpp"
#include "oddcycles/cycles.hpp"
#include "oddcycles/errors.hpp"
#include "oddcycles/group.hpp"
#include "oddcycles/parallel.hpp"

namespace oddcycles::cli {

namespace {

struct GlobalOptions {
  bool json = false;
  bool csv = false;
  u64 max_memory = DecomposeOptions::kDefaultMaxMemory;
  bool no_elements = false;
  u64 seed = 0;
  std::optional<unsigned> workers;
  bool timing = false;

  OutputFormat format() const {
    return json ? OutputFormat::kJson : csv ? OutputFormat::kCsv : OutputFormat::kText;
  }
};

unsigned resolve_workers(const GlobalOptions& g) {
  if (g.workers) return std::max(1u, *g.workers);
  if (const char* env = std::getenv(kWorkersEnv)) {
    char* end = nullptr;
    const unsigned long n = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) return static_cast<unsigned>(n);
  }
  return default_workers();
}

int verdict_exit(bool passed) { return passed ? kExitOk : kExitCheckFailed; }

int cmd_decompose(const GlobalOptions& g, u64 qv, std::ostream& out) {
  const OddModulus q(qv);
  DecomposeOptions opts;
  opts.keep_elements = !g.no_elements;
  opts.max_memory = g.max_memory;
  const CycleDecomposition d = decompose(q, opts);
  switch (g.format()) {
    case OutputFormat::kJson:
      out << decomposition_json(d, !g.no_elements).dump() << "\n";
      break;
    case OutputFormat::kCsv:
      write_histogram_csv(out, d.histogram);
      break;
    case OutputFormat::kText:
      write_decomposition_text(out, d, !g.no_elements);
      break;
  }
  return kExitOk;
}

int cmd_order(const GlobalOptions& g, u64 qv, std::ostream& out) {
  const OddModulus q(qv);
  const u64 eps = epsilon(q);
  const u64 oracle = order2_oracle(q);
  const bool agree = eps == oracle;
  switch (g.format()) {
    case OutputFormat::kJson: {
      Json j;
      j["q"] = json_uint(qv);
      j["epsilon"] = json_uint(eps);
      j["oracle"] = json_uint(oracle);
      j["agree"] = agree;
      out << j.dump() << "\n";
      break;
    }
    case OutputFormat::kCsv:
      out << "q,epsilon,oracle,agree\n" << qv << "," << eps << "," << oracle << ","
          << (agree ? 1 : 0) << "\n";
      break;
    case OutputFormat::kText:
      out << "epsilon(" << qv << ") = " << eps << " (sum of valuations around the cycle of 1)\n"
          << "order of 2 mod " << qv << " = " << oracle << " (oracle)\n"
          << (agree ? "agree" : "DISAGREE") << "\n";
      break;
  }
  return verdict_exit(agree);
}

struct GroupArgs {
  u64 q = 0;
  bool table = false;
  std::size_t table_cap = 512;
  std::string mode = "auto";
  u64 samples = 10'000;
  u64 triple_budget = 10'000'000;
};

int cmd_group(const GlobalOptions& g, const GroupArgs& a, std::ostream& out) {
  const OddModulus q(a.q);
  AxiomCheckOptions opts;
  opts.mode = a.mode == "exhaustive" ? AxiomMode::kExhaustive
              : a.mode == "sampled"  ? AxiomMode::kSampled
                                     : AxiomMode::kAuto;
  opts.samples = a.samples;
  opts.seed = g.seed;
  opts.triple_budget = a.triple_budget;
  opts.max_memory = g.max_memory;
  const AxiomReport report = verify_group_axioms(q, opts);
  const QuotientGroup group = quotient_group(q, a.table, a.table_cap);
  switch (g.format()) {
    case OutputFormat::kJson:
      out << axiom_report_json(report, group).dump() << "\n";
      break;
    case OutputFormat::kCsv:
      write_axiom_report_csv(out, report);
      break;
    case OutputFormat::kText:
      write_axiom_report_text(out, report, group);
      break;
  }
  return verdict_exit(report.passed());
}

int emit_conjecture(const GlobalOptions& g, const ConjectureReport& r,
                    std::optional<bool> divides, std::ostream& out) {
  switch (g.format()) {
    case OutputFormat::kJson: {
      Json j = conjecture_report_json(r, g.timing);
      if (divides) j["divides"] = *divides;
      out << j.dump() << "\n";
      break;
    }
    case OutputFormat::kCsv:
      write_histogram_csv(out, r.histogram);
      break;
    case OutputFormat::kText:
      write_conjecture_report_text(out, r, g.timing);
      if (divides)
        out << r.subject << (*divides ? " divides " : " does not divide ") << r.target.label()
            << "\n";
      break;
  }
  return verdict_exit(r.passed());
}

int cmd_fermat(const GlobalOptions& g, unsigned n, std::optional<u64> divisor, std::ostream& out) {
  const u64 f = fermat_number(n);
  if (!divisor) return emit_conjecture(g, check_fermat_cycles(OddModulus(f), n, g.max_memory), {}, out);
  const OddModulus d(*divisor);
  return emit_conjecture(g, check_fermat_cycles(d, n, g.max_memory), f % d.value() == 0, out);
}

int cmd_mersenne(const GlobalOptions& g, u64 p, std::optional<u64> divisor, std::ostream& out) {
  const u64 m = mersenne_number(p);
  if (!divisor) return emit_conjecture(g, check_mersenne_counts(p, g.max_memory), {}, out);
  const OddModulus d(*divisor);
  return emit_conjecture(g, check_mersenne_symmetry(d, p, g.max_memory), m % d.value() == 0, out);
}

struct ScreenArgs {
  u64 lo = 0;
  u64 hi = 0;
  std::optional<u64> mersenne;
  std::optional<unsigned> fermat;
  bool no_prefilter = false;
};

int cmd_screen(const GlobalOptions& g, const ScreenArgs& a, std::ostream& out) {
  const ConjectureTarget target = a.mersenne ? ConjectureTarget::mersenne(*a.mersenne)
                                             : ConjectureTarget::fermat(*a.fermat);
  ScreenOptions opts;
  opts.prefilter = !a.no_prefilter;
  opts.workers = resolve_workers(g);
  opts.max_memory = g.max_memory;
  const ScreenResult r = screen(a.lo, a.hi, target, opts);
  switch (g.format()) {
    case OutputFormat::kJson:
      out << screen_json(r).dump() << "\n";
      break;
    case OutputFormat::kCsv:
      write_screen_csv(out, r);
      break;
    case OutputFormat::kText:
      write_screen_text(out, r);
      break;
  }
  return r.violations.empty() ? kExitOk : kExitCheckFailed;
}

struct SweepArgs {
  u64 lo = 0;
  u64 hi = 0;
  std::string checks = "order,tau,prop3";
  u64 samples = 1000;
};

int cmd_sweep(const GlobalOptions& g, const SweepArgs& a, std::ostream& out, std::ostream& err) {
  SweepConfig config;
  config.lo = a.lo;
  config.hi = a.hi;
  config.checks = CheckSet::parse(a.checks);
  config.workers = resolve_workers(g);
  config.max_memory = g.max_memory;
  config.group_samples = a.samples;
  config.seed = g.seed;

  const OutputFormat format = g.format();
  bool first = true;
  if (format == OutputFormat::kJson) out << "[";
  if (format == OutputFormat::kCsv) out << sweep_csv_header() << "\n";
  const SweepSummary summary = run_sweep(config, [&](const SweepResult& r) {
    switch (format) {
      case OutputFormat::kJson:
        out << (first ? "\n" : ",\n") << sweep_result_json(r, g.timing).dump();
        break;
      case OutputFormat::kCsv:
        write_sweep_result_csv(out, r);
        break;
      case OutputFormat::kText:
        write_sweep_result_text(out, r);
        break;
    }
    first = false;
  });
  if (format == OutputFormat::kJson) out << "\n]\n";
  err << "swept " << summary.total << " moduli: " << summary.passed << " passed, "
      << summary.failed << " failed, " << summary.skipped << " skipped\n";
  return summary.failed == 0 ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cycle structure of x -> (q + x) / 2^k on odd residues, the order of 2, "
               "and the Fermat/Mersenne cycle-symmetry checks"};
  app.name(args.empty() ? "oddcycles" : args.front());
  app.require_subcommand(1);

  GlobalOptions g;
  auto* json = app.add_flag("--json", g.json, "JSON output");
  auto* csv = app.add_flag("--csv", g.csv, "CSV output");
  json->excludes(csv);
  app.add_option("--max-memory", g.max_memory, "Memory cap in bytes for decompositions");
  app.add_flag("--no-elements", g.no_elements, "Omit cycle element lists");
  app.add_option("--seed", g.seed, "Seed for sampled axiom checks");
  app.add_option("--workers", g.workers,
                 std::string("Worker threads (default: $") + kWorkersEnv + " or all cores)");
  app.add_flag("--timing", g.timing, "Include elapsed times in the output");

  u64 q = 0;
  auto* decompose_cmd = app.add_subcommand("decompose", "All cycles of an odd modulus");
  decompose_cmd->add_option("Q", q, "Odd modulus > 1")->required();
  decompose_cmd->fallthrough();

  auto* order_cmd = app.add_subcommand("order", "Order of 2 mod Q by the cycle algorithm and oracle");
  order_cmd->add_option("Q", q, "Odd modulus > 1")->required();
  order_cmd->fallthrough();

  GroupArgs group_args;
  auto* group_cmd = app.add_subcommand("group", "Quotient group classes and axiom checks");
  group_cmd->add_option("Q", group_args.q, "Odd modulus > 1")->required();
  group_cmd->add_flag("--table", group_args.table, "Print the Cayley table");
  group_cmd->add_option("--table-cap", group_args.table_cap, "Largest class count to tabulate");
  group_cmd->add_option("--mode", group_args.mode, "auto, exhaustive or sampled")
      ->check(CLI::IsMember({"auto", "exhaustive", "sampled"}));
  group_cmd->add_option("--samples", group_args.samples, "Triples in sampled mode");
  group_cmd->add_option("--triple-budget", group_args.triple_budget,
                        "Largest exhaustive triple count");
  group_cmd->fallthrough();

  unsigned fermat_n = 0;
  std::optional<u64> fermat_divisor;
  auto* fermat_cmd = app.add_subcommand("fermat", "Check that all cycles have length 2^N");
  fermat_cmd->add_option("N", fermat_n, "Fermat index, 0..5")->required();
  fermat_cmd->add_option("--divisor", fermat_divisor, "Check D instead of F_N");
  fermat_cmd->fallthrough();

  u64 mersenne_p = 0;
  std::optional<u64> mersenne_divisor;
  auto* mersenne_cmd = app.add_subcommand("mersenne", "Check k-cycle counts of M_P");
  mersenne_cmd->add_option("P", mersenne_p, "Prime exponent")->required();
  mersenne_cmd->add_option("--divisor", mersenne_divisor, "Check N_k == N_{P-k} for D");
  mersenne_cmd->fallthrough();

  ScreenArgs screen_args;
  auto* screen_cmd = app.add_subcommand("screen", "Screen odd d in [LO, HI] by a cycle criterion");
  screen_cmd->add_option("LO", screen_args.lo)->required();
  screen_cmd->add_option("HI", screen_args.hi)->required();
  auto* m_opt = screen_cmd->add_option("--mersenne", screen_args.mersenne, "Target M_P");
  auto* f_opt = screen_cmd->add_option("--fermat", screen_args.fermat, "Target F_N");
  m_opt->excludes(f_opt);
  screen_cmd->add_flag("--no-prefilter", screen_args.no_prefilter,
                       "Decompose every d, not only those whose order matches");
  screen_cmd->fallthrough();

  SweepArgs sweep_args;
  auto* sweep_cmd = app.add_subcommand("sweep", "Validate every odd q in [LO, HI]");
  sweep_cmd->add_option("LO", sweep_args.lo)->required();
  sweep_cmd->add_option("HI", sweep_args.hi)->required();
  sweep_cmd->add_option("--checks", sweep_args.checks, "order,tau,prop3,group or all");
  sweep_cmd->add_option("--samples", sweep_args.samples, "Sampled triples per q for group");
  sweep_cmd->fallthrough();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (screen_cmd->parsed() && !screen_args.mersenne && !screen_args.fermat)
      throw CLI::ValidationError("screen needs --mersenne P or --fermat N");
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (decompose_cmd->parsed()) return cmd_decompose(g, q, out);
    if (order_cmd->parsed()) return cmd_order(g, q, out);
    if (group_cmd->parsed()) return cmd_group(g, group_args, out);
    if (fermat_cmd->parsed()) return cmd_fermat(g, fermat_n, fermat_divisor, out);
    if (mersenne_cmd->parsed()) return cmd_mersenne(g, mersenne_p, mersenne_divisor, out);
    if (screen_cmd->parsed()) return cmd_screen(g, screen_args, out);
    if (sweep_cmd->parsed()) return cmd_sweep(g, sweep_args, out, err);
  } catch (const BudgetExceeded& e) {
    err << "refused: " << e.what() << "\n";
    return kExitBudget;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace oddcycles::cli
