#include "qmm1/des.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>
#include <vector>

#include "qmm1/rng.hpp"

namespace qmm1 {

void validate(const DesParams& p) {
  if (!(p.lambda > 0.0) || !std::isfinite(p.lambda)) {
    throw std::invalid_argument("des params: lambda must be finite and > 0");
  }
  if (!(p.mu > 0.0) || !std::isfinite(p.mu)) {
    throw std::invalid_argument("des params: mu must be finite and > 0");
  }
  if (p.capacity < 1) {
    throw std::invalid_argument("des params: capacity must be >= 1");
  }
  if (p.horizon_events < 1000) {
    throw std::invalid_argument("des params: horizon must be >= 1000 arrivals");
  }
  if (!(p.warmup_fraction >= 0.0 && p.warmup_fraction < 1.0)) {
    throw std::invalid_argument("des params: warmup fraction must be in [0, 1)");
  }
  if (p.batches < 2) {
    throw std::invalid_argument("des params: need at least 2 batches");
  }
  const auto post = static_cast<std::uint64_t>(
      static_cast<double>(p.horizon_events) * (1.0 - p.warmup_fraction));
  if (static_cast<std::uint64_t>(p.batches) > post) {
    throw std::invalid_argument("des params: more batches than post-warm-up arrivals");
  }
}

namespace {

// Two-sided 95% Student-t critical value.
double t975(int df) {
  static constexpr double kTable[30] = {
      12.706, 4.303, 3.182, 2.776, 2.571, 2.447, 2.365, 2.306, 2.262, 2.228,
      2.201,  2.179, 2.160, 2.145, 2.131, 2.120, 2.110, 2.101, 2.093, 2.086,
      2.080,  2.074, 2.069, 2.064, 2.060, 2.056, 2.052, 2.048, 2.045, 2.042};
  if (df < 1) return 0.0;
  if (df <= 30) return kTable[df - 1];
  if (df <= 40) return 2.021;
  if (df <= 60) return 2.000;
  if (df <= 120) return 1.980;
  return 1.960;
}

double half_width(const std::vector<double>& batch_values) {
  const auto m = batch_values.size();
  if (m < 2) return 0.0;
  double mean = 0.0;
  for (double v : batch_values) mean += v;
  mean /= static_cast<double>(m);
  double ss = 0.0;
  for (double v : batch_values) ss += (v - mean) * (v - mean);
  const double sd = std::sqrt(ss / static_cast<double>(m - 1));
  return t975(static_cast<int>(m) - 1) * sd / std::sqrt(static_cast<double>(m));
}

struct Customer {
  double arrival_time = 0.0;
  int batch = -1;  // -1: arrived during warm-up, excluded from wait statistics
};

}  // namespace

DesResult simulate_des(const DesParams& p) {
  validate(p);
  Rng arrivals(derive_seed(p.seed, 0));
  Rng services(derive_seed(p.seed, 1));

  const std::uint64_t horizon = p.horizon_events;
  const auto warmup_count = static_cast<std::uint64_t>(
      static_cast<double>(horizon) * p.warmup_fraction);
  const std::uint64_t post_total = horizon - warmup_count;
  const auto nbatches = static_cast<std::size_t>(p.batches);
  const std::uint64_t batch_size = post_total / nbatches;

  // Per-batch accumulators.
  std::vector<double> area_sys(nbatches, 0.0), area_q(nbatches, 0.0);
  std::vector<double> area_empty(nbatches, 0.0), area_full(nbatches, 0.0);
  std::vector<double> duration(nbatches, 0.0);
  std::vector<double> ws_sum(nbatches, 0.0), wq_sum(nbatches, 0.0);
  std::vector<std::uint64_t> ws_cnt(nbatches, 0), wq_cnt(nbatches, 0);
  std::vector<std::uint64_t> acc_in_batch(nbatches, 0);

  const double inf = std::numeric_limits<double>::infinity();
  double now = 0.0;
  double last_event = 0.0;
  double next_arrival = arrivals.exponential(p.lambda);
  double next_departure = inf;
  std::int64_t in_system = 0;
  std::deque<Customer> waiting;
  Customer in_service;

  std::uint64_t generated = 0, accepted = 0, blocked = 0;
  std::uint64_t post_arrivals = 0;
  bool stats_on = (warmup_count == 0);
  std::size_t active_batch = 0;

  const auto advance_clock = [&](double t) {
    if (stats_on) {
      const double span = t - last_event;
      area_sys[active_batch] += span * static_cast<double>(in_system);
      area_q[active_batch] += span * static_cast<double>(std::max<std::int64_t>(in_system - 1, 0));
      if (in_system == 0) area_empty[active_batch] += span;
      if (in_system == p.capacity) area_full[active_batch] += span;
      duration[active_batch] += span;
    }
    last_event = t;
  };

  const auto record_wq = [&](const Customer& c, double t) {
    if (c.batch >= 0) {
      wq_sum[static_cast<std::size_t>(c.batch)] += t - c.arrival_time;
      ++wq_cnt[static_cast<std::size_t>(c.batch)];
    }
  };

  while (generated < horizon) {
    if (next_arrival <= next_departure) {
      now = next_arrival;
      advance_clock(now);
      if (!stats_on && generated == warmup_count) {
        stats_on = true;
      }
      const bool post = stats_on;
      int batch = -1;
      if (post) {
        active_batch = static_cast<std::size_t>(
            std::min<std::uint64_t>(post_arrivals / batch_size, nbatches - 1));
        batch = static_cast<int>(active_batch);
        ++post_arrivals;
      }
      ++generated;
      if (in_system == p.capacity) {
        ++blocked;  // lost, not retried
      } else {
        ++accepted;
        if (post) ++acc_in_batch[active_batch];
        const Customer c{now, batch};
        if (in_system == 0) {
          in_service = c;
          record_wq(c, now);
          next_departure = now + services.exponential(p.mu);
        } else {
          waiting.push_back(c);
        }
        ++in_system;
      }
      if (generated < horizon) {
        next_arrival = now + arrivals.exponential(p.lambda);
      }
      // The clock stops at the final generated arrival.
    } else {
      now = next_departure;
      advance_clock(now);
      if (in_service.batch >= 0) {
        ws_sum[static_cast<std::size_t>(in_service.batch)] += now - in_service.arrival_time;
        ++ws_cnt[static_cast<std::size_t>(in_service.batch)];
      }
      --in_system;
      if (!waiting.empty()) {
        in_service = waiting.front();
        waiting.pop_front();
        record_wq(in_service, now);
        next_departure = now + services.exponential(p.mu);
      } else {
        next_departure = inf;
      }
    }
  }

  DesResult r;
  r.arrivals_generated = generated;
  r.accepted = accepted;
  r.blocked = blocked;

  double total_dur = 0.0, total_sys = 0.0, total_q = 0.0, total_empty = 0.0, total_full = 0.0;
  double total_ws = 0.0, total_wq = 0.0;
  std::uint64_t total_ws_cnt = 0, total_wq_cnt = 0, total_acc = 0;
  for (std::size_t b = 0; b < nbatches; ++b) {
    total_dur += duration[b];
    total_sys += area_sys[b];
    total_q += area_q[b];
    total_empty += area_empty[b];
    total_full += area_full[b];
    total_ws += ws_sum[b];
    total_wq += wq_sum[b];
    total_ws_cnt += ws_cnt[b];
    total_wq_cnt += wq_cnt[b];
    total_acc += acc_in_batch[b];
  }
  r.observed_time = total_dur;
  if (total_dur > 0.0) {
    r.metrics.Ls = total_sys / total_dur;
    r.metrics.Lq = total_q / total_dur;
    r.metrics.p0 = total_empty / total_dur;
    r.metrics.pK = total_full / total_dur;
    // Estimated accepted-arrival rate, projected onto the feasible [0, lambda].
    r.metrics.lambda_eff = std::min(p.lambda, static_cast<double>(total_acc) / total_dur);
  }
  if (total_ws_cnt > 0) r.metrics.Ws = total_ws / static_cast<double>(total_ws_cnt);
  if (total_wq_cnt > 0) r.metrics.Wq = total_wq / static_cast<double>(total_wq_cnt);

  std::vector<double> ls_b, lq_b, ws_b, wq_b, le_b;
  for (std::size_t b = 0; b < nbatches; ++b) {
    if (duration[b] > 0.0) {
      ls_b.push_back(area_sys[b] / duration[b]);
      lq_b.push_back(area_q[b] / duration[b]);
      le_b.push_back(static_cast<double>(acc_in_batch[b]) / duration[b]);
    }
    if (ws_cnt[b] > 0) ws_b.push_back(ws_sum[b] / static_cast<double>(ws_cnt[b]));
    if (wq_cnt[b] > 0) wq_b.push_back(wq_sum[b] / static_cast<double>(wq_cnt[b]));
  }
  r.ci_half_width.Ls = half_width(ls_b);
  r.ci_half_width.Lq = half_width(lq_b);
  r.ci_half_width.Ws = half_width(ws_b);
  r.ci_half_width.Wq = half_width(wq_b);
  r.ci_half_width.lambda_eff = half_width(le_b);
  return r;
}

}  // namespace qmm1
