#include "oddcycles/cli/format.hpp"

#include <map>
#include <ostream>
#include <sstream>

namespace oddcycles::cli {

namespace {

constexpr u64 kMaxExactDouble = u64{1} << 53;

std::string verdict_name(Verdict v) { return v == Verdict::kPass ? "pass" : "fail"; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Json json_uint(u64 v) {
  if (v > kMaxExactDouble) return std::to_string(v);
  return v;
}

Json histogram_json(const LengthHistogram& h) {
  Json arr = Json::array();
  for (const auto& [k, n] : h.entries()) arr.push_back(Json::array({json_uint(k), json_uint(n)}));
  return arr;
}

std::string cycle_notation(const Cycle& c) {
  std::ostringstream out;
  if (!c.has_elements()) {
    out << "[min " << c.min << ", length " << c.length << "]";
    return out.str();
  }
  out << "(";
  for (std::size_t i = 0; i < c.elements.size(); ++i) out << (i ? ", " : "") << c.elements[i];
  out << ")";
  return out.str();
}

std::string histogram_expansion(const std::string& label, const LengthHistogram& h) {
  std::ostringstream out;
  out << "|" << label << "| = ";
  bool first = true;
  for (const auto& [k, n] : h.entries()) {
    out << (first ? "" : " + ") << n << " x " << k;
    first = false;
  }
  out << " = " << h.covered();
  return out.str();
}

Json decomposition_json(const CycleDecomposition& d, bool with_elements) {
  Json j;
  j["q"] = json_uint(d.q.value());
  j["phi"] = json_uint(d.phi);
  j["epsilon"] = json_uint(d.epsilon);
  j["irreducible_count"] = json_uint(d.irreducible_count);
  j["histogram"] = histogram_json(d.histogram);
  Json cycles = Json::array();
  for (const auto& c : d.cycles) {
    Json cj;
    cj["min"] = json_uint(c.min);
    cj["length"] = json_uint(c.length);
    cj["xi"] = json_uint(c.xi);
    cj["gcd"] = json_uint(c.gcd_with_q);
    if (with_elements && c.has_elements()) {
      Json es = Json::array();
      for (u64 e : c.elements) es.push_back(json_uint(e));
      cj["elements"] = std::move(es);
    }
    cycles.push_back(std::move(cj));
  }
  j["cycles"] = std::move(cycles);
  return j;
}

void write_decomposition_text(std::ostream& out, const CycleDecomposition& d,
                              bool with_elements) {
  const u64 q = d.q.value();
  out << "G_" << q << "/R_" << q << ": " << d.cycles.size() << " cycles, phi = " << d.phi
      << ", epsilon = " << d.epsilon << ", irreducible = " << d.irreducible_count << "\n";
  for (const auto& c : d.cycles) {
    if (with_elements) {
      out << cycle_notation(c);
    } else {
      out << "[min " << c.min << ", length " << c.length << "]";
    }
    out << "  xi=" << c.xi;
    if (!c.irreducible()) out << " gcd=" << c.gcd_with_q;
    out << "\n";
  }
  out << histogram_expansion("G_" + std::to_string(q), d.histogram) << "\n";
  out << histogram_expansion("G*_" + std::to_string(q), d.irreducible_histogram) << "\n";
}

void write_histogram_csv(std::ostream& out, const LengthHistogram& h) {
  out << "length,count\n";
  for (const auto& [k, n] : h.entries()) out << k << "," << n << "\n";
}

Json axiom_report_json(const AxiomReport& r, const QuotientGroup& g) {
  Json j;
  j["q"] = json_uint(r.q.value());
  j["class_count"] = json_uint(r.class_count);
  Json reps = Json::array();
  for (u64 rep : g.reps) reps.push_back(json_uint(rep));
  j["reps"] = std::move(reps);
  j["mode"] = r.mode == AxiomMode::kExhaustive ? "exhaustive" : "sampled";
  Json axioms = Json::array();
  for (const auto& a : r.axioms) {
    Json aj;
    aj["name"] = a.name;
    aj["passed"] = a.passed;
    aj["trials"] = json_uint(a.trials);
    if (a.witness) aj["witness"] = *a.witness;
    axioms.push_back(std::move(aj));
  }
  j["axioms"] = std::move(axioms);
  j["passed"] = r.passed();
  j["element_associative"] = r.element_associative;
  j["element_associativity_failures"] = json_uint(r.element_associativity_failures);
  if (r.element_associativity_witness)
    j["element_associativity_witness"] = *r.element_associativity_witness;
  if (g.table) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < g.table->order(); ++i) {
      Json row = Json::array();
      for (std::size_t k = 0; k < g.table->order(); ++k)
        row.push_back(json_uint(g.reps[g.table->at(i, k)]));
      rows.push_back(std::move(row));
    }
    j["table"] = std::move(rows);
  }
  if (g.notice) j["notice"] = *g.notice;
  return j;
}

void write_axiom_report_text(std::ostream& out, const AxiomReport& r, const QuotientGroup& g) {
  const u64 q = r.q.value();
  out << "G*_" << q << "/R*_" << q << ": " << r.class_count << " classes\n";
  out << "representatives:";
  for (u64 rep : g.reps) out << " " << rep;
  out << "\n";
  if (g.table) {
    out << "table:\n";
    for (std::size_t i = 0; i < g.table->order(); ++i) {
      out << " ";
      for (std::size_t k = 0; k < g.table->order(); ++k) out << " " << g.reps[g.table->at(i, k)];
      out << "\n";
    }
  }
  if (g.notice) out << "note: " << *g.notice << "\n";
  out << "axioms (" << (r.mode == AxiomMode::kExhaustive ? "exhaustive" : "sampled") << "):\n";
  for (const auto& a : r.axioms) {
    out << "  " << a.name << ": " << (a.passed ? "pass" : "FAIL") << " (" << a.trials
        << " trials)";
    if (a.witness) out << "  " << *a.witness;
    out << "\n";
  }
  out << "element-level associativity: "
      << (r.element_associative ? "holds on every trial"
                                : "fails on " + std::to_string(r.element_associativity_failures) +
                                      " trial(s)");
  if (r.element_associativity_witness) out << ", e.g. " << *r.element_associativity_witness;
  out << "\n";
}

void write_axiom_report_csv(std::ostream& out, const AxiomReport& r) {
  out << "axiom,passed,trials\n";
  for (const auto& a : r.axioms) out << a.name << "," << (a.passed ? 1 : 0) << "," << a.trials << "\n";
}

Json conjecture_report_json(const ConjectureReport& r, bool with_timing) {
  Json j;
  j["subject"] = json_uint(r.subject);
  j["target"] = r.target.label();
  j["verdict"] = verdict_name(r.verdict);
  j["histogram"] = histogram_json(r.histogram);
  Json expected = Json::array();
  for (const auto& [k, n] : r.expected) expected.push_back(Json::array({json_uint(k), json_uint(n)}));
  j["expected"] = std::move(expected);
  j["violation"] = r.first_violation ? Json(describe(*r.first_violation)) : Json(nullptr);
  if (with_timing)
    j["elapsed_ms"] = std::chrono::duration<double, std::milli>(r.elapsed).count();
  return j;
}

void write_conjecture_report_text(std::ostream& out, const ConjectureReport& r,
                                  bool with_timing) {
  out << r.target.label() << " criterion on d = " << r.subject << ": " << verdict_name(r.verdict)
      << "\n";
  out << histogram_expansion("G_" + std::to_string(r.subject), r.histogram) << "\n";
  if (r.first_violation) out << "witness: " << describe(*r.first_violation) << "\n";
  if (with_timing)
    out << "elapsed: " << std::chrono::duration<double>(r.elapsed).count() << " s\n";
}

Json screen_json(const ScreenResult& r) {
  Json j;
  j["lo"] = json_uint(r.lo);
  j["hi"] = json_uint(r.hi);
  j["target"] = r.target.label();
  j["prefilter"] = r.prefilter;
  j["examined"] = json_uint(r.examined);
  j["decomposed"] = json_uint(r.decomposed);
  Json candidates = Json::array();
  for (const auto& c : r.candidates) {
    Json cj;
    cj["d"] = json_uint(c.d);
    cj["divides"] = c.divides_target;
    cj["histogram"] = histogram_json(c.report.histogram);
    candidates.push_back(std::move(cj));
  }
  j["candidates"] = std::move(candidates);
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    Json vj;
    vj["d"] = json_uint(v.d);
    vj["criterion_passed"] = v.criterion_passed;
    vj["divides"] = v.divides_target;
    vj["witness"] = v.witness ? Json(describe(*v.witness)) : Json(nullptr);
    violations.push_back(std::move(vj));
  }
  j["violations"] = std::move(violations);
  Json refusals = Json::array();
  for (const auto& f : r.refusals) {
    Json fj;
    fj["d"] = json_uint(f.d);
    fj["required_bytes"] = json_uint(f.required_bytes);
    refusals.push_back(std::move(fj));
  }
  j["refusals"] = std::move(refusals);
  return j;
}

void write_screen_text(std::ostream& out, const ScreenResult& r) {
  out << "screen [" << r.lo << ", " << r.hi << "] for " << r.target.label() << " = "
      << r.target.number() << (r.prefilter ? " (order prefilter on)" : "") << "\n";
  out << "examined " << r.examined << ", decomposed " << r.decomposed << "\n";
  out << "candidates:";
  if (r.candidates.empty()) out << " none";
  out << "\n";
  for (const auto& c : r.candidates)
    out << "  " << c.d << (c.divides_target ? "  divides " : "  DOES NOT divide ")
        << r.target.label() << "\n";
  if (!r.violations.empty()) {
    out << "conjecture violations:\n";
    for (const auto& v : r.violations) {
      out << "  d = " << v.d << ": criterion " << (v.criterion_passed ? "passes" : "fails")
          << " but d " << (v.divides_target ? "divides " : "does not divide ") << r.target.label();
      if (v.witness) out << " (" << describe(*v.witness) << ")";
      out << "\n";
    }
  }
  for (const auto& f : r.refusals)
    out << "  skipped d = " << f.d << ": needs " << f.required_bytes << " bytes\n";
}

void write_screen_csv(std::ostream& out, const ScreenResult& r) {
  // Candidates plus divisors that failed the criterion, merged by d.
  std::map<u64, std::pair<bool, bool>> rows;
  for (const auto& c : r.candidates) rows[c.d] = {true, c.divides_target};
  for (const auto& v : r.violations) rows[v.d] = {v.criterion_passed, v.divides_target};
  out << "d,criterion,divides\n";
  for (const auto& [d, row] : rows)
    out << d << "," << (row.first ? 1 : 0) << "," << (row.second ? 1 : 0) << "\n";
}

Json sweep_result_json(const SweepResult& r, bool with_timing) {
  Json j;
  j["q"] = json_uint(r.q);
  j["status"] = r.failed() ? "fail" : "pass";
  Json checks = Json::array();
  for (const auto& o : r.outcomes) {
    Json cj;
    cj["name"] = check_name(o.check);
    cj["status"] = status_name(o.status);
    cj["detail"] = o.detail;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  j["failure"] = r.first_failure ? Json(*r.first_failure) : Json(nullptr);
  if (with_timing) j["elapsed_ns"] = static_cast<std::int64_t>(r.elapsed.count());
  return j;
}

void write_sweep_result_text(std::ostream& out, const SweepResult& r) {
  out << "q=" << r.q;
  for (const auto& o : r.outcomes) out << " " << check_name(o.check) << "=" << status_name(o.status);
  out << "\n";
  if (r.first_failure) out << "  ! " << *r.first_failure << "\n";
}

std::string sweep_csv_header() { return "q,order,tau,prop3,group,failure"; }

void write_sweep_result_csv(std::ostream& out, const SweepResult& r) {
  out << r.q;
  for (Check c : {Check::kOrder, Check::kTau, Check::kProp3, Check::kGroup}) {
    out << ",";
    for (const auto& o : r.outcomes)
      if (o.check == c) out << status_name(o.status);
  }
  out << "," << csv_field(r.first_failure.value_or("")) << "\n";
}

}  // namespace oddcycles::cli
