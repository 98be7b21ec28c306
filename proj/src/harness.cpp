#include "qmm1/harness.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace qmm1 {

const std::array<Scenario, 3>& all_scenarios() {
  static const std::array<Scenario, 3> kScenarios = {{
      {"low", 1.0, 10.0},
      {"moderate", 5.0, 10.0},
      {"high", 9.5, 10.0},
  }};
  return kScenarios;
}

std::optional<Scenario> scenario_by_name(const std::string& name) {
  for (const Scenario& s : all_scenarios()) {
    if (s.name == name) return s;
  }
  return std::nullopt;
}

SimParams make_sim_params(const Scenario& sc, int qubits, const SimOverrides& ov) {
  SimParams p;
  p.lambda = sc.lambda;
  p.mu = sc.mu;
  p.alpha = ov.alpha.value_or(0.1);
  p.beta = ov.beta.value_or(0.1);
  p.dt = ov.dt.value_or(0.1);
  p.steps = ov.steps.value_or(1000);
  p.n = qubits;
  p.thresholds = ov.thresholds.value_or(Thresholds{});
  p.grover_iters = ov.grover_iters.value_or(1);
  p.k_source = ov.k_source.value_or(KSource::kStepIndex);
  p.seed = ov.seed.value_or(0);
  p.shots = ov.shots;
  return p;
}

namespace {

// Metrics of one finished quantum run: from sampled counts when shots were
// requested, otherwise from the exact final distribution.
QueueMetrics measure(const SimTrace& trace) {
  if (trace.counts) {
    Distribution empirical;
    empirical.probabilities.assign(trace.final_distribution.size(), 0.0);
    const auto shots = static_cast<double>(*trace.params.shots);
    for (const auto& [idx, cnt] : *trace.counts) {
      empirical.probabilities[idx] = static_cast<double>(cnt) / shots;
    }
    return quantum_metrics(empirical, trace.params.lambda, trace.params.mu);
  }
  return quantum_metrics(trace.final_distribution, trace.params.lambda, trace.params.mu);
}

}  // namespace

ComparisonResult run_comparison(const Scenario& sc, int qubits, const SimOverrides& ov,
                                std::uint64_t des_events) {
  ComparisonResult r;
  r.scenario = sc;
  r.qubits = qubits;
  r.sim_params = make_sim_params(sc, qubits, ov);

  const SimTrace trace = simulate(r.sim_params);
  r.sim_norm_error = trace.final_norm_error;
  r.quantum = measure(trace);

  const auto capacity = (std::int64_t{1} << qubits) - 1;
  r.theory = metrics(TheoryInput{sc.lambda, sc.mu, capacity});

  r.des_params = DesParams{sc.lambda, sc.mu,         capacity, des_events,
                           0.1,       r.sim_params.seed, 20};
  r.des = simulate_des(r.des_params);

  r.rows = compare(r.quantum, r.theory, r.des.metrics);
  return r;
}

std::vector<ConvergenceRow> run_convergence(const Scenario& sc, int n_min, int n_max,
                                            const SimOverrides& ov) {
  if (n_min < 2 || n_max > kMaxQubits || n_min > n_max) {
    throw std::invalid_argument("run_convergence: qubit range must lie within [2, 12]");
  }
  const double rho = sc.lambda / sc.mu;
  std::vector<ConvergenceRow> rows;
  for (int n = n_min; n <= n_max; ++n) {
    const SimParams params = make_sim_params(sc, n, ov);
    const SimTrace trace = simulate(params);
    const QueueMetrics q = measure(trace);
    const QueueMetrics t =
        metrics(TheoryInput{sc.lambda, sc.mu, (std::int64_t{1} << n) - 1});
    ConvergenceRow row;
    row.scenario = sc.name;
    row.qubits = n;
    row.lambda_eff_quantum = q.lambda_eff;
    row.lambda_eff_theory = t.lambda_eff;
    if (t.lambda_eff != 0.0) {
      row.rel_err = std::abs(q.lambda_eff - t.lambda_eff) / std::abs(t.lambda_eff);
    }
    if (rho > 0.0 && rho < 1.0) {
      row.error_bound_first = error_bound_first_term(sc.lambda, rho, n);
    }
    row.norm_error = trace.final_norm_error;
    rows.push_back(row);
  }
  return rows;
}

std::vector<double> grid_values(double lo, double hi, double step) {
  if (!(step > 0.0) || hi < lo) {
    throw std::invalid_argument("grid_values: need step > 0 and hi >= lo");
  }
  const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 0.5)) + 1;
  std::vector<double> values;
  values.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    values.push_back(lo + static_cast<double>(i) * step);
  }
  return values;
}

SimParams sweep_cell_params(const SweepSpec& spec, double alpha, double beta,
                            std::uint64_t cell_index) {
  SimParams p;
  p.lambda = spec.scenario.lambda;
  p.mu = spec.scenario.mu;
  p.alpha = alpha;
  p.beta = beta;
  p.dt = spec.dt;
  p.steps = spec.steps;
  p.n = spec.qubits;
  p.thresholds = spec.thresholds;
  p.grover_iters = spec.grover_iters;
  p.k_source = spec.k_source;
  p.seed = spec.seed + cell_index;
  p.shots = spec.shots;
  return p;
}

std::vector<SweepCell> run_sensitivity(const SweepSpec& spec, unsigned workers) {
  const std::vector<double> alphas = grid_values(spec.alpha_min, spec.alpha_max, spec.alpha_step);
  const std::vector<double> betas = grid_values(spec.beta_min, spec.beta_max, spec.beta_step);
  const std::size_t total = alphas.size() * betas.size();

  const QueueMetrics theory_m = metrics(
      TheoryInput{spec.scenario.lambda, spec.scenario.mu, (std::int64_t{1} << spec.qubits) - 1});

  std::vector<SweepCell> cells(total);
  std::atomic<std::size_t> next{0};
  const auto work = [&]() {
    for (std::size_t i = next.fetch_add(1); i < total; i = next.fetch_add(1)) {
      const double alpha = alphas[i / betas.size()];
      const double beta = betas[i % betas.size()];
      const SimParams params = sweep_cell_params(spec, alpha, beta, i);
      const SimTrace trace = simulate(params);
      const QueueMetrics q = measure(trace);
      SweepCell& cell = cells[i];
      cell.scenario = spec.scenario.name;
      cell.alpha = alpha;
      cell.beta = beta;
      cell.lambda_eff_quantum = q.lambda_eff;
      cell.lambda_eff_theory = theory_m.lambda_eff;
      if (theory_m.lambda_eff != 0.0) {
        cell.rel_err =
            std::abs(q.lambda_eff - theory_m.lambda_eff) / std::abs(theory_m.lambda_eff);
      }
      cell.seed = params.seed;
      cell.norm_error = trace.final_norm_error;
    }
  };

  unsigned nthreads = workers != 0 ? workers : std::thread::hardware_concurrency();
  if (nthreads == 0) nthreads = 1;
  if (nthreads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }
  return cells;  // row-major over (alpha, beta): already sorted
}

std::vector<SweepCell> run_sensitivity_all(const SweepSpec& spec, unsigned workers) {
  std::vector<SweepCell> all;
  std::uint64_t scenario_index = 0;
  for (const Scenario& sc : all_scenarios()) {
    SweepSpec s = spec;
    s.scenario = sc;
    const std::size_t per_scenario =
        grid_values(s.alpha_min, s.alpha_max, s.alpha_step).size() *
        grid_values(s.beta_min, s.beta_max, s.beta_step).size();
    s.seed = spec.seed + scenario_index * per_scenario;
    const std::vector<SweepCell> cells = run_sensitivity(s, workers);
    all.insert(all.end(), cells.begin(), cells.end());
    ++scenario_index;
  }
  return all;
}

}  // namespace qmm1
