#include "qmm1/gates.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qmm1 {

Gate2 identity_gate() {
  Gate2 g;
  g.m = {Complex{1.0, 0.0}, Complex{0.0, 0.0}, Complex{0.0, 0.0}, Complex{1.0, 0.0}};
  return g;
}

Gate2 matmul(const Gate2& a, const Gate2& b) {
  Gate2 c;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      c.at(i, j) = a.at(i, 0) * b.at(0, j) + a.at(i, 1) * b.at(1, j);
    }
  }
  return c;
}

double unitarity_defect(const Gate2& g) {
  double worst = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      // (U†U)_ij = sum_k conj(U_ki) U_kj
      Complex e = std::conj(g.at(0, i)) * g.at(0, j) + std::conj(g.at(1, i)) * g.at(1, j);
      if (i == j) e -= 1.0;
      worst = std::max(worst, std::abs(e));
    }
  }
  return worst;
}

bool is_unitary(const Gate2& g, double tol) { return unitarity_defect(g) <= tol; }

Gate2 ry(double theta) {
  if (!std::isfinite(theta)) {
    throw std::invalid_argument("ry: theta must be finite");
  }
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  Gate2 g;
  g.m = {Complex{c, 0.0}, Complex{-s, 0.0}, Complex{s, 0.0}, Complex{c, 0.0}};
  return g;
}

namespace {

void validate(const GateParams& p) {
  if (!(p.rate >= 0.0) || !std::isfinite(p.rate)) {
    throw std::invalid_argument("gate params: rate must be finite and >= 0");
  }
  if (!(p.dt > 0.0) || !std::isfinite(p.dt)) {
    throw std::invalid_argument("gate params: dt must be finite and > 0");
  }
  if (!(p.amp >= 0.0) || !std::isfinite(p.amp)) {
    throw std::invalid_argument("gate params: amp must be finite and >= 0");
  }
  if (p.k < 0) {
    throw std::invalid_argument("gate params: k must be >= 0");
  }
}

double raw_probability(const GateParams& p) {
  return p.rate * (1.0 + p.amp * static_cast<double>(p.k)) * p.dt;
}

}  // namespace

double event_probability(const GateParams& p) {
  validate(p);
  return std::min(raw_probability(p), 1.0);
}

bool event_saturates(const GateParams& p) {
  validate(p);
  return raw_probability(p) >= 1.0;
}

double event_angle(const GateParams& p) {
  return 2.0 * std::asin(std::sqrt(event_probability(p)));
}

Gate2 arrival_gate(const GateParams& p) { return ry(event_angle(p)); }

Gate2 service_gate(const GateParams& p) { return ry(event_angle(p)); }

}  // namespace qmm1
