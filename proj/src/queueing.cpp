// Copyright 2026 The msrcpspr Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "msrcpspr/queueing.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "msrcpspr/errors.hpp"

namespace msrcpspr {
namespace {

constexpr int kBatches = 30;
constexpr double kWarmupFraction = 0.1;
// Two-sided 95% Student t quantile with kBatches - 1 degrees of freedom.
constexpr double kT29 = 2.0452296421327034;

[[noreturn]] void throw_unstable(double lambda, double critical) {
  throw InstabilityError("arrival rate " + std::to_string(lambda) + " is not below the critical rate " +
                             std::to_string(critical),
                         critical);
}

class ExpSource {
 public:
  explicit ExpSource(std::uint64_t seed) : engine_(seed) {}
  double operator()(double rate) {
    // Uniform in (0,1) from the top 53 bits; independent of the library's
    // distribution implementations.
    const double u = (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
    return -std::log(u) / rate;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace

double critical_arrival_rate(const ReliabilityParams& p) {
  return p.retrieval_rate * p.service_rate / (p.retrieval_rate + p.disruption_rate);
}

double waiting_time(double lambda, const ReliabilityParams& p) {
  const double r = p.retrieval_rate;
  const double u = p.disruption_rate;
  const double mu = p.service_rate;
  const double denom_rate = r * mu - r * lambda - lambda * u;
  if (!(denom_rate > 0.0) || lambda < 0.0) throw_unstable(lambda, critical_arrival_rate(p));
  return ((r + u) * (r + u) + mu * u) / ((r + u) * denom_rate);
}

double waiting_time(const QueueOperatingPoint& point) { return waiting_time(point.arrival_rate, point.params); }

SimEstimate simulate_queue(const QueueOperatingPoint& point, double horizon, std::uint64_t seed) {
  const double lambda = point.arrival_rate;
  const double mu = point.params.service_rate;
  const double upsilon = point.params.disruption_rate;
  const double repair = point.params.retrieval_rate;
  if (!(horizon > 0.0)) throw std::invalid_argument("simulation horizon must be > 0");
  if (!(lambda > 0.0)) throw std::invalid_argument("simulation needs a positive arrival rate");
  const double critical = critical_arrival_rate(point.params);
  if (!(lambda < critical)) throw_unstable(lambda, critical);

  constexpr double kNever = std::numeric_limits<double>::infinity();
  ExpSource draw(seed);
  const double warmup = kWarmupFraction * horizon;

  std::deque<double> arrivals;  // FIFO of arrival epochs, front is in service
  std::vector<double> sojourns;
  sojourns.reserve(static_cast<std::size_t>(lambda * horizon * 1.05) + 16);

  bool up = true;
  double now = 0.0;
  double next_arrival = draw(lambda);
  double next_breakdown = draw(upsilon);
  double next_repair = kNever;
  double next_completion = kNever;
  double remaining = 0.0;  // residual work of a preempted service

  while (true) {
    const double t = std::min({next_arrival, next_breakdown, next_repair, next_completion});
    if (t > horizon) break;
    now = t;
    if (t == next_arrival) {
      arrivals.push_back(now);
      if (up && arrivals.size() == 1) next_completion = now + draw(mu);
      next_arrival = now + draw(lambda);
    } else if (t == next_completion) {
      if (arrivals.front() >= warmup) sojourns.push_back(now - arrivals.front());
      arrivals.pop_front();
      next_completion = arrivals.empty() ? kNever : now + draw(mu);
    } else if (t == next_breakdown) {
      up = false;
      if (next_completion != kNever) {
        remaining = next_completion - now;
        next_completion = kNever;
      }
      next_breakdown = kNever;
      next_repair = now + draw(repair);
    } else {
      up = true;
      next_repair = kNever;
      next_breakdown = now + draw(upsilon);
      if (!arrivals.empty()) {
        next_completion = now + (remaining > 0.0 ? remaining : draw(mu));
        remaining = 0.0;
      }
    }
  }

  SimEstimate estimate;
  const std::size_t batch = sojourns.size() / kBatches;
  if (batch == 0) {
    estimate.samples = sojourns.size();
    double sum = 0.0;
    for (double s : sojourns) sum += s;
    estimate.mean_wait = sojourns.empty() ? 0.0 : sum / static_cast<double>(sojourns.size());
    estimate.half_width = std::numeric_limits<double>::infinity();
    return estimate;
  }
  std::vector<double> means(kBatches, 0.0);
  for (int b = 0; b < kBatches; ++b) {
    double sum = 0.0;
    for (std::size_t i = 0; i < batch; ++i) sum += sojourns[b * batch + i];
    means[b] = sum / static_cast<double>(batch);
  }
  double grand = 0.0;
  for (double m : means) grand += m;
  grand /= kBatches;
  double var = 0.0;
  for (double m : means) var += (m - grand) * (m - grand);
  var /= kBatches - 1;
  estimate.mean_wait = grand;
  estimate.half_width = kT29 * std::sqrt(var / kBatches);
  estimate.samples = batch * kBatches;
  return estimate;
}

}  // namespace msrcpspr
