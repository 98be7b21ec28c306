#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qmm1/harness.hpp"

namespace qmm1 {

// Numbers in CSV output carry 9 significant digits ("%.9g"); parsing such a
// field and re-serializing it reproduces the bytes exactly.
std::string format_g9(double v);
std::string format_field(const std::optional<double>& v);  // empty when absent

// CSV schemas (documented in docs/formats.md). Serializers emit a header row
// and "\n" line endings; parsers reject unknown headers.
extern const char* kComparisonCsvHeader;   // metric,quantum,theory,des,rel_err_qt,flags
extern const char* kConvergenceCsvHeader;  // scenario,qubits,lambda_eff_quantum,...
extern const char* kSweepCsvHeader;        // scenario,alpha,beta,lambda_eff_quantum,...

std::string comparison_csv(const std::vector<ComparisonRow>& rows);
std::vector<ComparisonRow> parse_comparison_csv(const std::string& text);

std::string convergence_csv(const std::vector<ConvergenceRow>& rows);
std::vector<ConvergenceRow> parse_convergence_csv(const std::string& text);

std::string sweep_csv(const std::vector<SweepCell>& cells);
std::vector<SweepCell> parse_sweep_csv(const std::string& text);

// JSON views.
nlohmann::json to_json(const Thresholds& th);
nlohmann::json to_json(const SimParams& p);
nlohmann::json to_json(const QueueMetrics& m);
nlohmann::json to_json(const SimTrace& trace, bool include_steps = true);
nlohmann::json to_json(const DesParams& p);
nlohmann::json to_json(const DesResult& r);
nlohmann::json to_json(const DemoReport& r);
nlohmann::json to_json(const ComparisonRow& row);
nlohmann::json to_json(const ComparisonResult& r);
nlohmann::json to_json(const ConvergenceRow& row);
nlohmann::json to_json(const SweepCell& cell);

// Sidecar recording the full parameter set of every run in a sweep.
nlohmann::json sweep_sidecar(const SweepSpec& spec, const std::vector<SweepCell>& cells);

void write_file(const std::string& path, const std::string& content);

}  // namespace qmm1
