#pragma once

#include <cstdint>
#include <vector>

#include "qmm1/statevector.hpp"

namespace qmm1 {

// Utilization thresholds splitting traffic into low / moderate / high bands.
struct Thresholds {
  double eps0 = 0.3;
  double eps1 = 0.7;
};

// Throws unless 0 < eps0 < eps1 < 1.
void validate(const Thresholds& th);

struct MarkedStateSet {
  int n = 0;
  std::vector<std::uint64_t> states;  // sorted, unique, non-empty
};

// Picks the marked basis-state band from the utilization rho = lambda / mu:
// the lower, middle, or upper third of [0, 2^n - 1] (inclusive endpoints).
MarkedStateSet determine_marked_states(double lambda, double mu, int n, const Thresholds& th);

// One application of G = (2|psi><psi| - I)(2|m><m| - I), where |psi> is the
// uniform superposition and |m> the uniform superposition of marked states.
// Runs as two rank-1 reflection updates, O(2^n), never materializing G.
StateVector grover_apply(const StateVector& state, const MarkedStateSet& m);
void grover_apply_inplace(StateVector& state, const MarkedStateSet& m);

// Explicit dense G as a row-major 2^n x 2^n matrix. Test oracle; n <= 8.
std::vector<Complex> grover_dense(int n, const MarkedStateSet& m);

}  // namespace qmm1
