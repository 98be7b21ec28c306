#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace qmm1 {

// Closed-form inputs for a single-server queue with Poisson arrivals,
// exponential service, and finite capacity K.
struct TheoryInput {
  double lambda = 0.0;
  double mu = 1.0;
  std::int64_t capacity = 1;  // K: maximum customers in the system
};

// The five standard observables plus the boundary probabilities. Waits are
// absent when lambda_eff is zero; they are never serialized as NaN.
struct QueueMetrics {
  double Ls = 0.0;          // expected customers in system
  double Lq = 0.0;          // expected customers waiting
  std::optional<double> Ws; // expected time in system
  std::optional<double> Wq; // expected waiting time
  double lambda_eff = 0.0;  // accepted-arrival rate
  double p0 = 0.0;          // empty probability
  double pK = 0.0;          // blocking probability
};

// Stationary probability of i customers:
//   P_i = rho^i (1 - rho) / (1 - rho^{K+1}),  rho != 1
//   P_i = 1 / (K + 1)                          at the rho = 1 limit
double state_probability(const TheoryInput& t, std::int64_t i);

// Closed-form metrics:
//   Ls = rho/(1-rho) - (K+1) rho^{K+1} / (1 - rho^{K+1})   (rho != 1; K/2 at the limit)
//   lambda_eff = lambda (1 - P_K), Lq = Ls - (1 - P_0),
//   Ws = Ls / lambda_eff, Wq = Ws - 1/mu.
QueueMetrics metrics(const TheoryInput& t);

// Independent verification route: solves the birth-death balance equations
// lambda P_{i-1} = mu P_i by direct recursion and normalization, without the
// closed forms. K <= 10,000.
std::vector<double> stationary_oracle(const TheoryInput& t);

}  // namespace qmm1
