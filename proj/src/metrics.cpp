#include "qmm1/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace qmm1 {

QueueMetrics quantum_metrics(const Distribution& dist, double lambda, double mu) {
  validate(dist);
  if (!(mu > 0.0)) {
    throw std::invalid_argument("quantum_metrics: mu must be > 0");
  }
  if (!(lambda >= 0.0)) {
    throw std::invalid_argument("quantum_metrics: lambda must be >= 0");
  }
  QueueMetrics q;
  q.p0 = dist.probabilities.front();
  q.pK = dist.probabilities.back();
  double ls = 0.0;
  for (std::size_t s = 0; s < dist.size(); ++s) {
    ls += static_cast<double>(s) * dist.probabilities[s];
  }
  q.Ls = ls;
  q.lambda_eff = lambda * (1.0 - q.pK);
  q.Lq = q.Ls - (1.0 - q.p0);
  if (q.lambda_eff > 0.0) {
    q.Ws = q.Ls / q.lambda_eff;
    q.Wq = *q.Ws - 1.0 / mu;
  }
  return q;
}

double error_bound_first_term(double lambda, double rho, int n) {
  if (!(rho > 0.0 && rho < 1.0)) {
    throw std::invalid_argument("error_bound_first_term: rho must be in (0, 1)");
  }
  if (!(lambda >= 0.0)) {
    throw std::invalid_argument("error_bound_first_term: lambda must be >= 0");
  }
  if (n < 1) {
    throw std::invalid_argument("error_bound_first_term: n must be >= 1");
  }
  const double p = std::pow(rho, std::ldexp(1.0, n));  // rho^(2^n)
  return lambda * p / (1.0 - p);
}

double error_bound_second_term_scale(int n) {
  if (n < 1) {
    throw std::invalid_argument("error_bound_second_term_scale: n must be >= 1");
  }
  return 1.0 / std::sqrt(std::ldexp(1.0, n));
}

namespace {

ComparisonRow make_row(std::string name, std::optional<double> q, std::optional<double> t,
                       std::optional<double> d) {
  ComparisonRow row;
  row.metric = std::move(name);
  row.quantum = q;
  row.theory = t;
  row.des = d;
  if (!q || !t) {
    row.flags.push_back("value_absent");
  } else if (*t != 0.0) {
    row.rel_err_qt = std::abs(*q - *t) / std::abs(*t);
  } else {
    row.rel_err_qt = std::abs(*q);
    row.flags.push_back("rel_err_undefined");
  }
  return row;
}

}  // namespace

std::vector<ComparisonRow> compare(const QueueMetrics& quantum, const QueueMetrics& theory,
                                   const std::optional<QueueMetrics>& des) {
  const auto des_val = [&](auto pick) -> std::optional<double> {
    if (!des) return std::nullopt;
    return pick(*des);
  };
  std::vector<ComparisonRow> rows;
  rows.push_back(make_row("Lq", quantum.Lq, theory.Lq,
                          des_val([](const QueueMetrics& m) { return m.Lq; })));
  rows.push_back(make_row("Ls", quantum.Ls, theory.Ls,
                          des_val([](const QueueMetrics& m) { return m.Ls; })));
  rows.push_back(make_row("Wq", quantum.Wq, theory.Wq, des ? des->Wq : std::optional<double>{}));
  rows.push_back(make_row("Ws", quantum.Ws, theory.Ws, des ? des->Ws : std::optional<double>{}));
  rows.push_back(make_row("lambda_eff", quantum.lambda_eff, theory.lambda_eff,
                          des_val([](const QueueMetrics& m) { return m.lambda_eff; })));
  return rows;
}

}  // namespace qmm1
