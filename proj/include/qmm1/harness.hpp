#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qmm1/des.hpp"
#include "qmm1/metrics.hpp"
#include "qmm1/qsim.hpp"

namespace qmm1 {

// The three canonical traffic scenarios.
struct Scenario {
  std::string name;
  double lambda = 0.0;
  double mu = 0.0;
};

const std::array<Scenario, 3>& all_scenarios();  // low, moderate, high
std::optional<Scenario> scenario_by_name(const std::string& name);

// Optional knobs layered on the default experiment settings
// (alpha = beta = 0.1, dt = 0.1, T = 1000, exact measurement).
struct SimOverrides {
  std::optional<double> alpha;
  std::optional<double> beta;
  std::optional<double> dt;
  std::optional<std::uint64_t> steps;
  std::optional<std::uint64_t> grover_iters;
  std::optional<KSource> k_source;
  std::optional<Thresholds> thresholds;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> shots;
};

SimParams make_sim_params(const Scenario& sc, int qubits, const SimOverrides& ov = {});

struct ComparisonResult {
  Scenario scenario;
  int qubits = 0;
  SimParams sim_params;
  DesParams des_params;
  QueueMetrics quantum;
  QueueMetrics theory;
  DesResult des;
  std::vector<ComparisonRow> rows;
  double sim_norm_error = 0.0;
};

// One quantum run, the closed-form metrics at K = 2^n - 1, one DES run, and
// the per-metric comparison rows.
ComparisonResult run_comparison(const Scenario& sc, int qubits, const SimOverrides& ov = {},
                                std::uint64_t des_events = 1000000);

struct ConvergenceRow {
  std::string scenario;
  int qubits = 0;
  double lambda_eff_quantum = 0.0;
  double lambda_eff_theory = 0.0;
  std::optional<double> rel_err;
  std::optional<double> error_bound_first;  // defined for rho < 1
  double norm_error = 0.0;                  // not serialized
};

// One row per qubit count in [n_min, n_max].
std::vector<ConvergenceRow> run_convergence(const Scenario& sc, int n_min = 2, int n_max = 9,
                                            const SimOverrides& ov = {});

// Inclusive (alpha, beta) grid for the amplification-parameter sweep.
struct SweepSpec {
  Scenario scenario;
  double alpha_min = 0.01, alpha_max = 0.15, alpha_step = 0.01;
  double beta_min = 0.01, beta_max = 0.15, beta_step = 0.01;
  int qubits = 6;
  double dt = 0.1;
  std::uint64_t steps = 1000;
  std::optional<std::uint64_t> shots = 10000;
  std::uint64_t seed = 0;  // cell i runs with seed + i (row-major over alpha, beta)
  std::uint64_t grover_iters = 1;
  KSource k_source = KSource::kStepIndex;
  Thresholds thresholds{};
};

struct SweepCell {
  std::string scenario;
  double alpha = 0.0;
  double beta = 0.0;
  double lambda_eff_quantum = 0.0;
  double lambda_eff_theory = 0.0;
  std::optional<double> rel_err;
  std::uint64_t seed = 0;    // not serialized in the CSV; the sidecar has it
  double norm_error = 0.0;   // not serialized
};

std::vector<double> grid_values(double lo, double hi, double step);

// Runs every grid cell as an isolated simulation. Cells may execute on any
// number of workers (0 picks the hardware count); output order and content
// are identical regardless, sorted by (alpha, beta).
std::vector<SweepCell> run_sensitivity(const SweepSpec& spec, unsigned workers = 0);

// All three scenarios with the same grid settings; scenario s uses base seed
// spec.seed + s * cells_per_scenario. Sorted by (scenario, alpha, beta).
std::vector<SweepCell> run_sensitivity_all(const SweepSpec& spec, unsigned workers = 0);

// SimParams for one sweep cell, exactly as run_sensitivity executes it.
SimParams sweep_cell_params(const SweepSpec& spec, double alpha, double beta,
                            std::uint64_t cell_index);

}  // namespace qmm1
