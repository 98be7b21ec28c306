#include "qmm1/theory.hpp"

#include <cmath>
#include <stdexcept>

namespace qmm1 {

namespace {

constexpr double kUnitRhoBand = 1e-9;  // |rho - 1| below this uses the limit branch

void validate(const TheoryInput& t) {
  if (!(t.mu > 0.0) || !std::isfinite(t.mu)) {
    throw std::invalid_argument("theory: mu must be finite and > 0");
  }
  if (!(t.lambda >= 0.0) || !std::isfinite(t.lambda)) {
    throw std::invalid_argument("theory: lambda must be finite and >= 0");
  }
  if (t.capacity < 1) {
    throw std::invalid_argument("theory: capacity must be >= 1");
  }
}

}  // namespace

double state_probability(const TheoryInput& t, std::int64_t i) {
  validate(t);
  if (i < 0 || i > t.capacity) {
    throw std::invalid_argument("state_probability: index outside [0, K]");
  }
  const double rho = t.lambda / t.mu;
  const auto K = static_cast<double>(t.capacity);
  if (std::abs(rho - 1.0) < kUnitRhoBand) {
    return 1.0 / (K + 1.0);
  }
  const auto x = static_cast<double>(i);
  if (rho < 1.0) {
    return std::pow(rho, x) * (1.0 - rho) / (1.0 - std::pow(rho, K + 1.0));
  }
  // rho > 1: scale by rho^{-(K+1)} so no power overflows.
  return std::pow(rho, x - K - 1.0) * (1.0 - rho) / (std::pow(rho, -(K + 1.0)) - 1.0);
}

QueueMetrics metrics(const TheoryInput& t) {
  validate(t);
  const double rho = t.lambda / t.mu;
  const auto K = static_cast<double>(t.capacity);

  QueueMetrics q;
  q.p0 = state_probability(t, 0);
  q.pK = state_probability(t, t.capacity);

  if (std::abs(rho - 1.0) < kUnitRhoBand) {
    q.Ls = K / 2.0;
  } else if (std::abs(rho - 1.0) < 1e-6) {
    // The two-term closed form cancels catastrophically this close to
    // rho = 1; the per-state probabilities stay accurate, so sum them.
    double ls = 0.0;
    for (std::int64_t i = 1; i <= t.capacity; ++i) {
      ls += static_cast<double>(i) * state_probability(t, i);
    }
    q.Ls = ls;
  } else if (rho < 1.0) {
    q.Ls = rho / (1.0 - rho) - (K + 1.0) * std::pow(rho, K + 1.0) / (1.0 - std::pow(rho, K + 1.0));
  } else {
    q.Ls = rho / (1.0 - rho) + (K + 1.0) / (1.0 - std::pow(rho, -(K + 1.0)));
  }

  q.lambda_eff = t.lambda * (1.0 - q.pK);
  q.Lq = q.Ls - (1.0 - q.p0);
  if (q.lambda_eff > 0.0) {
    q.Ws = q.Ls / q.lambda_eff;
    q.Wq = *q.Ws - 1.0 / t.mu;
  }
  return q;
}

std::vector<double> stationary_oracle(const TheoryInput& t) {
  validate(t);
  if (t.capacity > 10000) {
    throw std::invalid_argument("stationary_oracle: capacity must be <= 10000");
  }
  // Balance equations: lambda P_{i-1} = mu P_i.
  std::vector<double> p(static_cast<std::size_t>(t.capacity) + 1);
  p[0] = 1.0;
  const double ratio = t.lambda / t.mu;
  for (std::size_t i = 1; i < p.size(); ++i) {
    p[i] = p[i - 1] * ratio;
    if (p[i] > 1e300) {
      for (std::size_t j = 0; j <= i; ++j) p[j] /= p[i];
    }
  }
  double total = 0.0;
  for (double v : p) total += v;
  for (double& v : p) v /= total;
  return p;
}

}  // namespace qmm1
