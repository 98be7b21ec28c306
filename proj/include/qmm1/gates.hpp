#pragma once

#include <array>
#include <complex>
#include <cstdint>

namespace qmm1 {

using Complex = std::complex<double>;

// 2x2 complex matrix acting on a single qubit, row-major.
struct Gate2 {
  std::array<Complex, 4> m{};

  Complex& at(int row, int col) { return m[2 * row + col]; }
  const Complex& at(int row, int col) const { return m[2 * row + col]; }

  bool operator==(const Gate2&) const = default;
};

Gate2 identity_gate();

// a * b (matrix product).
Gate2 matmul(const Gate2& a, const Gate2& b);

// Max-norm of U†U - I.
double unitarity_defect(const Gate2& g);

bool is_unitary(const Gate2& g, double tol = 1e-9);

// Rotation about the Y axis:
//   [[cos(theta/2), -sin(theta/2)],
//    [sin(theta/2),  cos(theta/2)]]
Gate2 ry(double theta);

// Parameters of one arrival or service gate: the base rate (lambda or mu),
// the amplification index k, the amplification coefficient (alpha or beta),
// and the time step.
struct GateParams {
  double rate = 0.0;
  std::int64_t k = 0;
  double amp = 0.0;
  double dt = 0.0;
};

// Clamped one-step event probability min(rate * (1 + amp*k) * dt, 1).
double event_probability(const GateParams& p);

// True when the probability clamps at 1.
bool event_saturates(const GateParams& p);

// theta = 2 * asin(sqrt(event_probability(p))), in [0, pi]. Applied to |0>,
// the resulting rotation puts exactly event_probability(p) on |1>.
double event_angle(const GateParams& p);

Gate2 arrival_gate(const GateParams& p);
Gate2 service_gate(const GateParams& p);

}  // namespace qmm1
