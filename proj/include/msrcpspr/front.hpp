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

#ifndef MSRCPSPR_FRONT_HPP_
#define MSRCPSPR_FRONT_HPP_

#include <memory>
#include <string>
#include <vector>

#include "msrcpspr/schedule.hpp"

namespace msrcpspr {

enum class SolveStatus { Optimal, Infeasible, Timeout };

const char* status_name(SolveStatus status);

struct ParetoPoint {
  double makespan = 0.0;
  double cost = 0.0;
  double slack = 0.0;
  int grid_index = -1;  // -1 for points not produced by a grid sweep
  SolveStatus status = SolveStatus::Optimal;
  double wall_time = 0.0;
  std::shared_ptr<const ScheduleSolution> solution;
};

/// Positive and negative ideal values per objective, read off the payoff table.
struct PayoffTable {
  ObjectiveValues makespan_first;  // lexicographic (makespan, cost)
  ObjectiveValues cost_first;      // lexicographic (cost, makespan)
  ObjectiveValues pis;
  ObjectiveValues nis;
};

struct ParetoFront {
  std::vector<ParetoPoint> points;
  PayoffTable payoff;
  int grid_count = 0;
  std::string diagnosis;  // non-empty when the front is empty or partial
};

/// Keeps the points no other point weakly dominates (both objectives
/// minimized; of exact duplicates the first survives), ordered by makespan.
/// Values within a relative 1e-9 of each other compare as equal.
std::vector<ParetoPoint> dominance_filter(std::vector<ParetoPoint> points);

}  // namespace msrcpspr

#endif  // MSRCPSPR_FRONT_HPP_
