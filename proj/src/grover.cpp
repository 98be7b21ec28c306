#include "qmm1/grover.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qmm1 {

void validate(const Thresholds& th) {
  if (!(0.0 < th.eps0 && th.eps0 < th.eps1 && th.eps1 < 1.0)) {
    throw std::invalid_argument("thresholds: need 0 < eps0 < eps1 < 1");
  }
}

namespace {

void validate(const MarkedStateSet& m) {
  if (m.n < 1 || m.n > kMaxQubits) {
    throw std::invalid_argument("marked states: qubit count out of range");
  }
  if (m.states.empty()) {
    throw std::invalid_argument("marked states: empty set");
  }
  const std::uint64_t dim = std::uint64_t{1} << m.n;
  std::uint64_t prev = 0;
  bool first = true;
  for (std::uint64_t s : m.states) {
    if (s >= dim) throw std::invalid_argument("marked states: index out of range");
    if (!first && s <= prev) throw std::invalid_argument("marked states: not sorted/unique");
    prev = s;
    first = false;
  }
}

}  // namespace

MarkedStateSet determine_marked_states(double lambda, double mu, int n, const Thresholds& th) {
  validate(th);
  if (!(mu > 0.0)) {
    throw std::invalid_argument("determine_marked_states: mu must be > 0");
  }
  if (lambda < 0.0) {
    throw std::invalid_argument("determine_marked_states: lambda must be >= 0");
  }
  if (n < 1 || n > kMaxQubits) {
    throw std::invalid_argument("determine_marked_states: qubit count out of range");
  }
  const double rho = lambda / mu;
  const std::uint64_t top = (std::uint64_t{1} << n) - 1;
  std::uint64_t lo = 0;
  std::uint64_t hi = top;
  if (rho < th.eps0) {
    lo = 0;
    hi = top / 3;
  } else if (rho < th.eps1) {
    lo = top / 3;
    hi = 2 * top / 3;
  } else {
    lo = 2 * top / 3;
    hi = top;
  }
  MarkedStateSet m;
  m.n = n;
  m.states.reserve(hi - lo + 1);
  for (std::uint64_t s = lo; s <= hi; ++s) m.states.push_back(s);
  return m;
}

void grover_apply_inplace(StateVector& state, const MarkedStateSet& m) {
  validate(m);
  if (m.n != state.n) {
    throw std::invalid_argument("grover_apply: marked set and state dimensions differ");
  }

  // Reflection about |m>: v <- 2 <m|v> |m> - v.
  const double inv_sqrt_marked = 1.0 / std::sqrt(static_cast<double>(m.states.size()));
  Complex overlap_m{0.0, 0.0};
  for (std::uint64_t s : m.states) overlap_m += state.amplitudes[s];
  overlap_m *= inv_sqrt_marked;
  for (Complex& a : state.amplitudes) a = -a;
  for (std::uint64_t s : m.states) {
    state.amplitudes[s] += 2.0 * overlap_m * inv_sqrt_marked;
  }

  // Reflection about the uniform superposition: v <- 2 <psi|v> |psi> - v.
  const double inv_sqrt_dim = 1.0 / std::sqrt(static_cast<double>(state.dim()));
  Complex overlap_psi = std::accumulate(state.amplitudes.begin(), state.amplitudes.end(),
                                        Complex{0.0, 0.0});
  overlap_psi *= inv_sqrt_dim;
  for (Complex& a : state.amplitudes) {
    a = 2.0 * overlap_psi * inv_sqrt_dim - a;
  }
}

StateVector grover_apply(const StateVector& state, const MarkedStateSet& m) {
  StateVector out = state;
  grover_apply_inplace(out, m);
  return out;
}

std::vector<Complex> grover_dense(int n, const MarkedStateSet& m) {
  if (n < 1 || n > 8) {
    throw std::invalid_argument("grover_dense: n must be in [1, 8]");
  }
  validate(m);
  if (m.n != n) {
    throw std::invalid_argument("grover_dense: marked set dimension mismatch");
  }
  const std::size_t dim = std::size_t{1} << n;

  // R_m = 2|m><m| - I
  std::vector<Complex> rm(dim * dim, Complex{0.0, 0.0});
  const double inv_marked = 1.0 / static_cast<double>(m.states.size());
  for (std::size_t i = 0; i < dim; ++i) rm[i * dim + i] = Complex{-1.0, 0.0};
  for (std::uint64_t r : m.states) {
    for (std::uint64_t c : m.states) {
      rm[r * dim + c] += 2.0 * inv_marked;
    }
  }

  // R_psi = 2|psi><psi| - I
  std::vector<Complex> rpsi(dim * dim, Complex{2.0 / static_cast<double>(dim), 0.0});
  for (std::size_t i = 0; i < dim; ++i) rpsi[i * dim + i] -= 1.0;

  // G = R_psi * R_m
  std::vector<Complex> g(dim * dim, Complex{0.0, 0.0});
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t k = 0; k < dim; ++k) {
      const Complex v = rpsi[i * dim + k];
      if (v == Complex{0.0, 0.0}) continue;
      for (std::size_t j = 0; j < dim; ++j) {
        g[i * dim + j] += v * rm[k * dim + j];
      }
    }
  }
  return g;
}

}  // namespace qmm1
