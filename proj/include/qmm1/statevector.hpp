#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "qmm1/gates.hpp"

namespace qmm1 {

inline constexpr int kMaxQubits = 12;

// Dense amplitude vector over 2^n basis states. Qubit 0 is the least
// significant bit of the basis index, so basis index s reads directly as
// "s customers in the system".
struct StateVector {
  int n = 0;
  std::vector<Complex> amplitudes;

  std::size_t dim() const { return amplitudes.size(); }

  // | sum |a_i|^2 - 1 |
  double norm_error() const;
};

struct Distribution {
  std::vector<double> probabilities;

  std::size_t size() const { return probabilities.size(); }
};

// Throws unless every entry is a probability and the mass sums to 1 within tol.
void validate(const Distribution& dist, double tol = 1e-9);

// |0...0>
StateVector zero_state(int n);

// Applies a 2x2 gate to one qubit. unitary_tol bounds the accepted unitarity
// defect of the gate; callers that deliberately apply an almost-unitary
// matrix may widen it.
StateVector apply_1q(const StateVector& state, const Gate2& gate, int qubit,
                     double unitary_tol = 1e-9);
void apply_1q_inplace(StateVector& state, const Gate2& gate, int qubit,
                      double unitary_tol = 1e-9);

// The same gate on every qubit (the n-fold tensor-power gate).
StateVector apply_uniform(const StateVector& state, const Gate2& gate,
                          double unitary_tol = 1e-9);
void apply_uniform_inplace(StateVector& state, const Gate2& gate,
                           double unitary_tol = 1e-9);

Distribution probabilities(const StateVector& state);

// P(qubit reads 1).
double marginal_one_probability(const StateVector& state, int qubit);

// Inverse-CDF sampling with the rng-v1 generator; deterministic per
// (dist, shots, seed). Only observed outcomes appear in the result.
std::map<std::uint64_t, std::uint64_t> sample(const Distribution& dist,
                                              std::uint64_t shots,
                                              std::uint64_t seed);

}  // namespace qmm1
