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

#include "msrcpspr/front.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace msrcpspr {

const char* status_name(SolveStatus status) {
  switch (status) {
    case SolveStatus::Optimal: return "optimal";
    case SolveStatus::Infeasible: return "infeasible";
    case SolveStatus::Timeout: return "timeout";
  }
  return "unknown";
}

std::vector<ParetoPoint> dominance_filter(std::vector<ParetoPoint> points) {
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (points[a].makespan != points[b].makespan) return points[a].makespan < points[b].makespan;
    return points[a].cost < points[b].cost;
  });
  std::vector<ParetoPoint> kept;
  double best_cost = 0.0;
  for (std::size_t idx : order) {
    const double c = points[idx].cost;
    if (!kept.empty() && !(c < best_cost - 1e-9 * (1.0 + std::fabs(best_cost)))) continue;
    best_cost = c;
    // Makespans equal up to rounding: the cheaper later point replaces the last.
    const double m = points[idx].makespan;
    if (!kept.empty() && m <= kept.back().makespan + 1e-9 * (1.0 + std::fabs(m))) kept.pop_back();
    kept.push_back(std::move(points[idx]));
  }
  return kept;
}

}  // namespace msrcpspr
