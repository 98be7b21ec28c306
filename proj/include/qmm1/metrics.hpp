#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qmm1/statevector.hpp"
#include "qmm1/theory.hpp"

namespace qmm1 {

// One line of a quantum-vs-baseline comparison table.
struct ComparisonRow {
  std::string metric;  // "Lq", "Ls", "Wq", "Ws", "lambda_eff"
  std::optional<double> quantum;
  std::optional<double> theory;
  std::optional<double> des;
  // |q - t| / |t| when theory != 0; |q| (flagged) when theory == 0; absent
  // when either side is absent.
  std::optional<double> rel_err_qt;
  std::vector<std::string> flags;
};

// Queue observables of a measured length distribution: Ls = sum s * p_s,
// lambda_eff = lambda * (1 - p_last), and the usual relations for the rest.
QueueMetrics quantum_metrics(const Distribution& dist, double lambda, double mu);

// First term of the effective-arrival-rate error bound,
// lambda * rho^{2^n} / (1 - rho^{2^n}); requires 0 < rho < 1.
double error_bound_first_term(double lambda, double rho, int n);

// Scale of the bound's amplitude-estimation term, 1/sqrt(2^n). Its constant
// factor is unspecified, so it is reported as-is and never asserted against.
double error_bound_second_term_scale(int n);

// One row per metric, in the order Lq, Ls, Wq, Ws, lambda_eff.
std::vector<ComparisonRow> compare(const QueueMetrics& quantum, const QueueMetrics& theory,
                                   const std::optional<QueueMetrics>& des = std::nullopt);

}  // namespace qmm1
