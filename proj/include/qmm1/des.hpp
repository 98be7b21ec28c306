#pragma once

#include <cstdint>

#include "qmm1/theory.hpp"

namespace qmm1 {

struct DesParams {
  double lambda = 1.0;
  double mu = 1.0;
  std::int64_t capacity = 1;            // K
  std::uint64_t horizon_events = 1000;  // total arrivals to generate
  double warmup_fraction = 0.1;         // leading fraction of arrivals discarded
  std::uint64_t seed = 0;
  int batches = 20;                     // batch-means batches for the CIs
};

void validate(const DesParams& p);

struct MetricsHalfWidth {
  double Ls = 0.0;
  double Lq = 0.0;
  double Ws = 0.0;
  double Wq = 0.0;
  double lambda_eff = 0.0;
};

struct DesResult {
  QueueMetrics metrics;          // post-warm-up point estimates
  MetricsHalfWidth ci_half_width;  // 95% batch-means half-widths
  std::uint64_t arrivals_generated = 0;
  std::uint64_t accepted = 0;    // over the whole run; accepted + blocked == generated
  std::uint64_t blocked = 0;
  double observed_time = 0.0;    // length of the post-warm-up window
};

// Event-driven simulation of the finite-capacity single-server queue:
// exponential interarrivals and services, arrivals finding K customers are
// lost. Ls and Lq are time averages, Ws and Wq per-customer averages, and
// lambda_eff is the accepted-arrival rate (capped at lambda). Deterministic
// for a fixed seed; arrivals and services draw from independent rng-v1
// streams.
DesResult simulate_des(const DesParams& p);

}  // namespace qmm1
