#include "qmm1/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qmm1/rng.hpp"

namespace qmm1 {

double StateVector::norm_error() const {
  double total = 0.0;
  for (const Complex& a : amplitudes) total += std::norm(a);
  return std::abs(total - 1.0);
}

void validate(const Distribution& dist, double tol) {
  if (dist.probabilities.empty()) {
    throw std::invalid_argument("distribution: empty");
  }
  double total = 0.0;
  for (double p : dist.probabilities) {
    if (!(p >= -1e-12) || !(p <= 1.0 + 1e-12)) {
      throw std::invalid_argument("distribution: entry outside [0, 1]");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > tol) {
    throw std::invalid_argument("distribution: mass sums to " + std::to_string(total));
  }
}

StateVector zero_state(int n) {
  if (n < 1 || n > kMaxQubits) {
    throw std::invalid_argument("zero_state: qubit count must be in [1, " +
                                std::to_string(kMaxQubits) + "]");
  }
  StateVector s;
  s.n = n;
  s.amplitudes.assign(std::size_t{1} << n, Complex{0.0, 0.0});
  s.amplitudes[0] = Complex{1.0, 0.0};
  return s;
}

void apply_1q_inplace(StateVector& state, const Gate2& gate, int qubit, double unitary_tol) {
  if (qubit < 0 || qubit >= state.n) {
    throw std::invalid_argument("apply_1q: qubit index out of range");
  }
  if (!is_unitary(gate, unitary_tol)) {
    throw std::invalid_argument("apply_1q: gate is not unitary within tolerance");
  }
  const std::size_t bit = std::size_t{1} << qubit;
  const std::size_t dim = state.dim();
  for (std::size_t base = 0; base < dim; ++base) {
    if (base & bit) continue;
    const Complex a0 = state.amplitudes[base];
    const Complex a1 = state.amplitudes[base | bit];
    state.amplitudes[base] = gate.at(0, 0) * a0 + gate.at(0, 1) * a1;
    state.amplitudes[base | bit] = gate.at(1, 0) * a0 + gate.at(1, 1) * a1;
  }
}

StateVector apply_1q(const StateVector& state, const Gate2& gate, int qubit, double unitary_tol) {
  StateVector out = state;
  apply_1q_inplace(out, gate, qubit, unitary_tol);
  return out;
}

void apply_uniform_inplace(StateVector& state, const Gate2& gate, double unitary_tol) {
  if (!is_unitary(gate, unitary_tol)) {
    throw std::invalid_argument("apply_uniform: gate is not unitary within tolerance");
  }
  // Single-qubit gates on distinct qubits commute; any order works.
  for (int q = 0; q < state.n; ++q) {
    apply_1q_inplace(state, gate, q, unitary_tol);
  }
}

StateVector apply_uniform(const StateVector& state, const Gate2& gate, double unitary_tol) {
  StateVector out = state;
  apply_uniform_inplace(out, gate, unitary_tol);
  return out;
}

Distribution probabilities(const StateVector& state) {
  Distribution d;
  d.probabilities.reserve(state.dim());
  for (const Complex& a : state.amplitudes) d.probabilities.push_back(std::norm(a));
  return d;
}

double marginal_one_probability(const StateVector& state, int qubit) {
  if (qubit < 0 || qubit >= state.n) {
    throw std::invalid_argument("marginal_one_probability: qubit index out of range");
  }
  const std::size_t bit = std::size_t{1} << qubit;
  double p = 0.0;
  for (std::size_t i = 0; i < state.dim(); ++i) {
    if (i & bit) p += std::norm(state.amplitudes[i]);
  }
  return p;
}

std::map<std::uint64_t, std::uint64_t> sample(const Distribution& dist, std::uint64_t shots,
                                              std::uint64_t seed) {
  if (shots == 0) {
    throw std::invalid_argument("sample: shots must be >= 1");
  }
  validate(dist);
  std::vector<double> cdf(dist.size());
  double running = 0.0;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    running += dist.probabilities[i];
    cdf[i] = running;
  }
  const double total = cdf.back();

  Rng rng(seed);
  std::map<std::uint64_t, std::uint64_t> counts;
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = rng.uniform01() * total;
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    const auto idx = static_cast<std::uint64_t>(std::distance(cdf.begin(), it));
    ++counts[std::min<std::uint64_t>(idx, dist.size() - 1)];
  }
  return counts;
}

}  // namespace qmm1
