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

#ifndef MSRCPSPR_VIKOR_HPP_
#define MSRCPSPR_VIKOR_HPP_

#include <array>
#include <string>
#include <vector>

#include "msrcpspr/front.hpp"
#include "msrcpspr/schedule.hpp"

namespace msrcpspr {

struct VikorOptions {
  std::array<double, 2> weights{0.5, 0.5};  // makespan, cost
  double v = 0.5;                           // weight of group utility in Q
};

struct VikorScore {
  double makespan = 0.0;
  double cost = 0.0;
  double S = 0.0;  // group utility
  double R = 0.0;  // individual regret
  double Q = 0.0;  // compromise index
  int rank = 0;    // 1-based position in `order`
  bool in_compromise_set = false;
};

struct VikorRanking {
  std::vector<VikorScore> scores;  // input order
  std::vector<int> order;          // indices into scores, best first
  std::vector<int> compromise;     // indices into scores, rank order
  bool acceptable_advantage = false;
  bool acceptable_stability = false;
  VikorOptions options;
  std::vector<std::string> warnings;
};

/// Both criteria are minimized. A criterion whose best and worst values
/// coincide contributes 0 to S and R (with a warning); the same holds for
/// the S and R terms of Q. Q ties are broken by R, S, makespan, input order.
VikorRanking rank(const std::vector<ObjectiveValues>& alternatives, const VikorOptions& options = {});
VikorRanking rank(const ParetoFront& front, const VikorOptions& options = {});

/// The compromise set: the best-by-Q alternative when it has an acceptable
/// advantage (Q gap to the runner-up >= 1/(m-1)) and is stable (also best
/// by S or R); the two leaders when only stability fails; otherwise every
/// alternative whose Q lies within 1/(m-1) of the best.
std::vector<int> select_compromise(const VikorRanking& ranking);

}  // namespace msrcpspr

#endif  // MSRCPSPR_VIKOR_HPP_
