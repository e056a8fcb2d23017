#pragma once

// Text, JSON and CSV renderings of library results. JSON integers above
// 2^53 are written as decimal strings so downstream readers stay exact.

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "oddcycles/cli/sweep.hpp"
#include "oddcycles/conjectures.hpp"
#include "oddcycles/cycles.hpp"
#include "oddcycles/group.hpp"

namespace oddcycles::cli {

using Json = nlohmann::ordered_json;

enum class OutputFormat { kText, kJson, kCsv };

/// Number when exactly representable as a double, decimal string otherwise.
Json json_uint(u64 v);

Json histogram_json(const LengthHistogram& h);

/// "(1, 9, 13, 15)"; "[min 1, length 32]" when elements were dropped.
std::string cycle_notation(const Cycle& c);

/// "|G_31| = 1 x 1 + 2 x 2 + 2 x 3 + 1 x 4 = 15", counts before lengths.
std::string histogram_expansion(const std::string& label, const LengthHistogram& h);

Json decomposition_json(const CycleDecomposition& d, bool with_elements);
void write_decomposition_text(std::ostream& out, const CycleDecomposition& d,
                              bool with_elements);
void write_histogram_csv(std::ostream& out, const LengthHistogram& h);

Json axiom_report_json(const AxiomReport& r, const QuotientGroup& g);
void write_axiom_report_text(std::ostream& out, const AxiomReport& r, const QuotientGroup& g);
void write_axiom_report_csv(std::ostream& out, const AxiomReport& r);

Json conjecture_report_json(const ConjectureReport& r, bool with_timing);
void write_conjecture_report_text(std::ostream& out, const ConjectureReport& r,
                                  bool with_timing);

Json screen_json(const ScreenResult& r);
void write_screen_text(std::ostream& out, const ScreenResult& r);
void write_screen_csv(std::ostream& out, const ScreenResult& r);

Json sweep_result_json(const SweepResult& r, bool with_timing);
void write_sweep_result_text(std::ostream& out, const SweepResult& r);
std::string sweep_csv_header();
void write_sweep_result_csv(std::ostream& out, const SweepResult& r);

}  // namespace oddcycles::cli
