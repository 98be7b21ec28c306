#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qmm1/gates.hpp"
#include "qmm1/grover.hpp"
#include "qmm1/statevector.hpp"

namespace qmm1 {

// Where the amplification index k for step s_t comes from: the step index
// itself, a constant zero, or the rounded mean of the current length
// distribution.
enum class KSource { kStepIndex, kConstantZero, kExpectedLength };

const char* to_string(KSource k);
std::optional<KSource> k_source_from_string(const std::string& name);

struct SimParams {
  double lambda = 0.0;
  double mu = 1.0;
  double alpha = 0.1;
  double beta = 0.1;
  double dt = 0.1;
  std::uint64_t steps = 0;  // T
  int n = 1;
  Thresholds thresholds{};
  std::uint64_t grover_iters = 1;  // applications of G per time step
  KSource k_source = KSource::kStepIndex;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> shots;  // unset: exact probabilities
};

void validate(const SimParams& p);

struct StepRecord {
  std::uint64_t step = 0;
  std::int64_t k = 0;
  double theta_arrival = 0.0;
  double theta_service = 0.0;
  bool saturated_arrival = false;  // clamped event probability
  bool saturated_service = false;
  Distribution distribution;  // after this step's gates and amplification
};

struct SimTrace {
  SimParams params;
  MarkedStateSet marked;
  std::vector<StepRecord> steps;
  StateVector final_state;
  Distribution final_distribution;
  std::optional<std::map<std::uint64_t, std::uint64_t>> counts;
  bool any_saturation = false;
  double final_norm_error = 0.0;
};

// The full simulation loop: |0...0>, one marked-state determination, then T
// steps of (arrival tensor gate, service tensor gate, grover_iters
// amplifications), and a final measurement (exact, plus sampled counts when
// shots is set).
SimTrace simulate(const SimParams& p);

// One golden-value self check of the pipeline on the canonical small
// configuration (lambda=2, mu=3, three qubits).
struct DemoCheck {
  std::string name;
  double expected = 0.0;
  double actual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct DemoReport {
  SimParams params;
  MarkedStateSet marked;
  double theta_arrival = 0.0;
  double theta_service = 0.0;
  Gate2 arrival;
  Gate2 service;
  Gate2 composite;      // service * arrival, exact
  Gate2 composite_3dp;  // product of the 3-decimal-truncated factors
  double marginal_p0 = 0.0;  // qubit-0 marginal after one step
  double marginal_p1 = 0.0;
  Distribution step1_distribution;
  double theory_Ls = 0.0;
  double norm_error = 0.0;
  std::vector<DemoCheck> checks;
  bool all_pass = false;
};

DemoReport demo_report();

}  // namespace qmm1
