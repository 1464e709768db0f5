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

#ifndef MSRCPSPR_QUEUEING_HPP_
#define MSRCPSPR_QUEUEING_HPP_

#include <cstddef>
#include <cstdint>

#include "msrcpspr/instance.hpp"

namespace msrcpspr {

struct QueueOperatingPoint {
  double arrival_rate = 0.0;
  ReliabilityParams params;
};

/// Largest arrival rate the unreliable server can sustain: r*mu / (r + upsilon).
double critical_arrival_rate(const ReliabilityParams& params);

/// Mean time in system of an M/M/1 server whose breakdowns arrive at rate
/// upsilon and are repaired at rate r:
///
///   W = ((r+u)^2 + mu*u) / ((r+u) * (r*mu - r*lambda - lambda*u))
///
/// Throws InstabilityError at or above critical_arrival_rate().
double waiting_time(const QueueOperatingPoint& point);
double waiting_time(double arrival_rate, const ReliabilityParams& params);

struct SimEstimate {
  double mean_wait = 0.0;
  double half_width = 0.0;  // 95% confidence
  std::size_t samples = 0;  // customers after warm-up
};

/// Event-driven simulation of the same queue with preemptive-resume
/// breakdowns that strike whether or not the server is busy. Time in system
/// is estimated by 30 non-overlapping batch means after discarding customers
/// that arrive in the first 10% of `horizon`.
SimEstimate simulate_queue(const QueueOperatingPoint& point, double horizon, std::uint64_t seed);

}  // namespace msrcpspr

#endif  // MSRCPSPR_QUEUEING_HPP_
