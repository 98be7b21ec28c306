#include "qmm1/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qmm1 {

std::string format_g9(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

std::string format_field(const std::optional<double>& v) {
  return v ? format_g9(*v) : std::string{};
}

const char* kComparisonCsvHeader = "metric,quantum,theory,des,rel_err_qt,flags";
const char* kConvergenceCsvHeader =
    "scenario,qubits,lambda_eff_quantum,lambda_eff_theory,rel_err,error_bound_first_term";
const char* kSweepCsvHeader =
    "scenario,alpha,beta,lambda_eff_quantum,lambda_eff_theory,rel_err";

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(line.substr(start));
      break;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

std::vector<std::vector<std::string>> parse_table(const std::string& text, const char* header,
                                                  std::size_t columns) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != header) {
    throw std::invalid_argument("csv: unexpected header");
  }
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto fields = split(line, ',');
    if (fields.size() != columns) {
      throw std::invalid_argument("csv: wrong column count on row " +
                                  std::to_string(rows.size() + 1));
    }
    rows.push_back(std::move(fields));
  }
  return rows;
}

std::optional<double> parse_field(const std::string& s) {
  if (s.empty()) return std::nullopt;
  std::size_t used = 0;
  const double v = std::stod(s, &used);
  if (used != s.size()) {
    throw std::invalid_argument("csv: malformed number '" + s + "'");
  }
  return v;
}

std::string join_flags(const std::vector<std::string>& flags) {
  std::string out;
  for (std::size_t i = 0; i < flags.size(); ++i) {
    if (i) out += ';';
    out += flags[i];
  }
  return out;
}

}  // namespace

std::string comparison_csv(const std::vector<ComparisonRow>& rows) {
  std::string out = kComparisonCsvHeader;
  out += '\n';
  for (const ComparisonRow& r : rows) {
    out += r.metric;
    out += ',';
    out += format_field(r.quantum);
    out += ',';
    out += format_field(r.theory);
    out += ',';
    out += format_field(r.des);
    out += ',';
    out += format_field(r.rel_err_qt);
    out += ',';
    out += join_flags(r.flags);
    out += '\n';
  }
  return out;
}

std::vector<ComparisonRow> parse_comparison_csv(const std::string& text) {
  std::vector<ComparisonRow> rows;
  for (const auto& f : parse_table(text, kComparisonCsvHeader, 6)) {
    ComparisonRow r;
    r.metric = f[0];
    r.quantum = parse_field(f[1]);
    r.theory = parse_field(f[2]);
    r.des = parse_field(f[3]);
    r.rel_err_qt = parse_field(f[4]);
    if (!f[5].empty()) r.flags = split(f[5], ';');
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string convergence_csv(const std::vector<ConvergenceRow>& rows) {
  std::string out = kConvergenceCsvHeader;
  out += '\n';
  for (const ConvergenceRow& r : rows) {
    out += r.scenario;
    out += ',';
    out += std::to_string(r.qubits);
    out += ',';
    out += format_g9(r.lambda_eff_quantum);
    out += ',';
    out += format_g9(r.lambda_eff_theory);
    out += ',';
    out += format_field(r.rel_err);
    out += ',';
    out += format_field(r.error_bound_first);
    out += '\n';
  }
  return out;
}

std::vector<ConvergenceRow> parse_convergence_csv(const std::string& text) {
  std::vector<ConvergenceRow> rows;
  for (const auto& f : parse_table(text, kConvergenceCsvHeader, 6)) {
    ConvergenceRow r;
    r.scenario = f[0];
    r.qubits = std::stoi(f[1]);
    r.lambda_eff_quantum = parse_field(f[2]).value();
    r.lambda_eff_theory = parse_field(f[3]).value();
    r.rel_err = parse_field(f[4]);
    r.error_bound_first = parse_field(f[5]);
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string sweep_csv(const std::vector<SweepCell>& cells) {
  std::string out = kSweepCsvHeader;
  out += '\n';
  for (const SweepCell& c : cells) {
    out += c.scenario;
    out += ',';
    out += format_g9(c.alpha);
    out += ',';
    out += format_g9(c.beta);
    out += ',';
    out += format_g9(c.lambda_eff_quantum);
    out += ',';
    out += format_g9(c.lambda_eff_theory);
    out += ',';
    out += format_field(c.rel_err);
    out += '\n';
  }
  return out;
}

std::vector<SweepCell> parse_sweep_csv(const std::string& text) {
  std::vector<SweepCell> cells;
  for (const auto& f : parse_table(text, kSweepCsvHeader, 6)) {
    SweepCell c;
    c.scenario = f[0];
    c.alpha = parse_field(f[1]).value();
    c.beta = parse_field(f[2]).value();
    c.lambda_eff_quantum = parse_field(f[3]).value();
    c.lambda_eff_theory = parse_field(f[4]).value();
    c.rel_err = parse_field(f[5]);
    cells.push_back(std::move(c));
  }
  return cells;
}

nlohmann::json to_json(const Thresholds& th) {
  return {{"eps0", th.eps0}, {"eps1", th.eps1}};
}

nlohmann::json to_json(const SimParams& p) {
  nlohmann::json j{{"lambda", p.lambda},
                   {"mu", p.mu},
                   {"alpha", p.alpha},
                   {"beta", p.beta},
                   {"dt", p.dt},
                   {"steps", p.steps},
                   {"qubits", p.n},
                   {"thresholds", to_json(p.thresholds)},
                   {"grover_iters", p.grover_iters},
                   {"k_source", to_string(p.k_source)},
                   {"seed", p.seed},
                   {"rng", kRngVersion}};
  j["shots"] = p.shots ? nlohmann::json(*p.shots) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json to_json(const QueueMetrics& m) {
  nlohmann::json j{{"Ls", m.Ls},         {"Lq", m.Lq}, {"lambda_eff", m.lambda_eff},
                   {"p0", m.p0},         {"pK", m.pK}};
  j["Ws"] = m.Ws ? nlohmann::json(*m.Ws) : nlohmann::json(nullptr);
  j["Wq"] = m.Wq ? nlohmann::json(*m.Wq) : nlohmann::json(nullptr);
  return j;
}

namespace {

nlohmann::json amplitudes_json(const StateVector& s) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Complex& a : s.amplitudes) {
    arr.push_back({a.real(), a.imag()});
  }
  return arr;
}

}  // namespace

nlohmann::json to_json(const SimTrace& trace, bool include_steps) {
  nlohmann::json j;
  j["params"] = to_json(trace.params);
  j["marked_states"] = trace.marked.states;
  j["any_saturation"] = trace.any_saturation;
  j["final_norm_error"] = trace.final_norm_error;
  j["final_probabilities"] = trace.final_distribution.probabilities;
  j["final_amplitudes"] = amplitudes_json(trace.final_state);
  if (include_steps) {
    nlohmann::json steps = nlohmann::json::array();
    for (const StepRecord& rec : trace.steps) {
      steps.push_back({{"step", rec.step},
                       {"k", rec.k},
                       {"theta_arrival", rec.theta_arrival},
                       {"theta_service", rec.theta_service},
                       {"saturated_arrival", rec.saturated_arrival},
                       {"saturated_service", rec.saturated_service},
                       {"probabilities", rec.distribution.probabilities}});
    }
    j["steps"] = std::move(steps);
  }
  if (trace.counts) {
    nlohmann::json counts = nlohmann::json::object();
    for (const auto& [idx, cnt] : *trace.counts) {
      counts[std::to_string(idx)] = cnt;
    }
    j["counts"] = std::move(counts);
  }
  return j;
}

nlohmann::json to_json(const DesParams& p) {
  return {{"lambda", p.lambda},
          {"mu", p.mu},
          {"capacity", p.capacity},
          {"horizon_events", p.horizon_events},
          {"warmup_fraction", p.warmup_fraction},
          {"seed", p.seed},
          {"batches", p.batches},
          {"rng", kRngVersion}};
}

nlohmann::json to_json(const DesResult& r) {
  return {{"metrics", to_json(r.metrics)},
          {"ci_half_width",
           {{"Ls", r.ci_half_width.Ls},
            {"Lq", r.ci_half_width.Lq},
            {"Ws", r.ci_half_width.Ws},
            {"Wq", r.ci_half_width.Wq},
            {"lambda_eff", r.ci_half_width.lambda_eff}}},
          {"arrivals_generated", r.arrivals_generated},
          {"accepted", r.accepted},
          {"blocked", r.blocked},
          {"observed_time", r.observed_time}};
}

namespace {

nlohmann::json gate_json(const Gate2& g) {
  return {{g.at(0, 0).real(), g.at(0, 1).real()}, {g.at(1, 0).real(), g.at(1, 1).real()}};
}

}  // namespace

nlohmann::json to_json(const DemoReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const DemoCheck& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"expected", c.expected},
                      {"actual", c.actual},
                      {"tolerance", c.tolerance},
                      {"pass", c.pass}});
  }
  return {{"params", to_json(r.params)},
          {"marked_states", r.marked.states},
          {"theta_arrival", r.theta_arrival},
          {"theta_service", r.theta_service},
          {"arrival_gate", gate_json(r.arrival)},
          {"service_gate", gate_json(r.service)},
          {"composite_gate", gate_json(r.composite)},
          {"composite_gate_3dp", gate_json(r.composite_3dp)},
          {"marginal_p0", r.marginal_p0},
          {"marginal_p1", r.marginal_p1},
          {"step1_probabilities", r.step1_distribution.probabilities},
          {"theory_Ls", r.theory_Ls},
          {"norm_error", r.norm_error},
          {"checks", std::move(checks)},
          {"all_pass", r.all_pass}};
}

nlohmann::json to_json(const ComparisonRow& row) {
  nlohmann::json j{{"metric", row.metric}, {"flags", row.flags}};
  j["quantum"] = row.quantum ? nlohmann::json(*row.quantum) : nlohmann::json(nullptr);
  j["theory"] = row.theory ? nlohmann::json(*row.theory) : nlohmann::json(nullptr);
  j["des"] = row.des ? nlohmann::json(*row.des) : nlohmann::json(nullptr);
  j["rel_err_qt"] = row.rel_err_qt ? nlohmann::json(*row.rel_err_qt) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json to_json(const ComparisonResult& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const ComparisonRow& row : r.rows) rows.push_back(to_json(row));
  return {{"scenario", r.scenario.name},
          {"qubits", r.qubits},
          {"sim_params", to_json(r.sim_params)},
          {"des_params", to_json(r.des_params)},
          {"quantum", to_json(r.quantum)},
          {"theory", to_json(r.theory)},
          {"des", to_json(r.des)},
          {"rows", std::move(rows)},
          {"sim_norm_error", r.sim_norm_error}};
}

nlohmann::json to_json(const ConvergenceRow& row) {
  nlohmann::json j{{"scenario", row.scenario},
                   {"qubits", row.qubits},
                   {"lambda_eff_quantum", row.lambda_eff_quantum},
                   {"lambda_eff_theory", row.lambda_eff_theory}};
  j["rel_err"] = row.rel_err ? nlohmann::json(*row.rel_err) : nlohmann::json(nullptr);
  j["error_bound_first_term"] =
      row.error_bound_first ? nlohmann::json(*row.error_bound_first) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json to_json(const SweepCell& cell) {
  nlohmann::json j{{"scenario", cell.scenario},
                   {"alpha", cell.alpha},
                   {"beta", cell.beta},
                   {"lambda_eff_quantum", cell.lambda_eff_quantum},
                   {"lambda_eff_theory", cell.lambda_eff_theory},
                   {"seed", cell.seed}};
  j["rel_err"] = cell.rel_err ? nlohmann::json(*cell.rel_err) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json sweep_sidecar(const SweepSpec& spec, const std::vector<SweepCell>& cells) {
  nlohmann::json runs = nlohmann::json::array();
  std::uint64_t index = 0;
  for (const SweepCell& c : cells) {
    SimParams p = sweep_cell_params(spec, c.alpha, c.beta, 0);
    p.seed = c.seed;  // authoritative per-cell seed, valid across scenarios
    runs.push_back({{"scenario", c.scenario}, {"cell", index++}, {"params", to_json(p)}});
  }
  return {{"grid",
           {{"alpha_min", spec.alpha_min},
            {"alpha_max", spec.alpha_max},
            {"alpha_step", spec.alpha_step},
            {"beta_min", spec.beta_min},
            {"beta_max", spec.beta_max},
            {"beta_step", spec.beta_step}}},
          {"base_seed", spec.seed},
          {"runs", std::move(runs)}};
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open for writing: " + path);
  }
  out << content;
  if (!out) {
    throw std::runtime_error("write failed: " + path);
  }
}

}  // namespace qmm1
