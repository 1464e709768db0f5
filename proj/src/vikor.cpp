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

#include "msrcpspr/vikor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace msrcpspr {
namespace {

// (value - best) / (worst - best), or 0 for a degenerate range.
double normalized(double value, double best, double worst) {
  return worst > best ? (value - best) / (worst - best) : 0.0;
}

}  // namespace

VikorRanking rank(const std::vector<ObjectiveValues>& alternatives, const VikorOptions& options) {
  const auto& w = options.weights;
  if (!(w[0] >= 0 && w[1] >= 0) || std::fabs(w[0] + w[1] - 1.0) > 1e-9)
    throw std::invalid_argument("weights must be non-negative and sum to 1");
  if (!(options.v >= 0 && options.v <= 1)) throw std::invalid_argument("v must lie in [0, 1]");

  VikorRanking out;
  out.options = options;
  const int m = static_cast<int>(alternatives.size());
  if (m == 0) return out;

  std::array<double, 2> best{alternatives[0].makespan, alternatives[0].cost};
  std::array<double, 2> worst = best;
  for (const auto& a : alternatives) {
    best[0] = std::min(best[0], a.makespan);
    worst[0] = std::max(worst[0], a.makespan);
    best[1] = std::min(best[1], a.cost);
    worst[1] = std::max(worst[1], a.cost);
  }
  static constexpr const char* kNames[2] = {"makespan", "cost"};
  if (m > 1)
    for (int c = 0; c < 2; ++c)
      if (!(worst[c] > best[c]))
        out.warnings.push_back(std::string("criterion ") + kNames[c] + " has a degenerate range; its terms are 0");

  out.scores.resize(m);
  for (int j = 0; j < m; ++j) {
    auto& s = out.scores[j];
    s.makespan = alternatives[j].makespan;
    s.cost = alternatives[j].cost;
    const double t0 = w[0] * normalized(s.makespan, best[0], worst[0]);
    const double t1 = w[1] * normalized(s.cost, best[1], worst[1]);
    s.S = t0 + t1;
    s.R = std::max(t0, t1);
  }
  double s_best = out.scores[0].S, s_worst = s_best, r_best = out.scores[0].R, r_worst = r_best;
  for (const auto& s : out.scores) {
    s_best = std::min(s_best, s.S);
    s_worst = std::max(s_worst, s.S);
    r_best = std::min(r_best, s.R);
    r_worst = std::max(r_worst, s.R);
  }
  for (auto& s : out.scores)
    s.Q = options.v * normalized(s.S, s_best, s_worst) + (1 - options.v) * normalized(s.R, r_best, r_worst);

  out.order.resize(m);
  std::iota(out.order.begin(), out.order.end(), 0);
  std::stable_sort(out.order.begin(), out.order.end(), [&](int a, int b) {
    const auto& x = out.scores[a];
    const auto& y = out.scores[b];
    if (x.Q != y.Q) return x.Q < y.Q;
    if (x.R != y.R) return x.R < y.R;
    if (x.S != y.S) return x.S < y.S;
    return x.makespan < y.makespan;
  });
  for (int pos = 0; pos < m; ++pos) out.scores[out.order[pos]].rank = pos + 1;

  if (m == 1) {
    out.acceptable_advantage = out.acceptable_stability = true;
  } else {
    const auto& lead = out.scores[out.order[0]];
    const double dq = 1.0 / (m - 1);
    out.acceptable_advantage = out.scores[out.order[1]].Q - lead.Q >= dq;
    out.acceptable_stability = lead.S == s_best || lead.R == r_best;
  }
  out.compromise = select_compromise(out);
  for (int j : out.compromise) out.scores[j].in_compromise_set = true;
  return out;
}

VikorRanking rank(const ParetoFront& front, const VikorOptions& options) {
  std::vector<ObjectiveValues> values;
  for (const auto& p : front.points) values.push_back({p.makespan, p.cost});
  return rank(values, options);
}

std::vector<int> select_compromise(const VikorRanking& ranking) {
  const auto& order = ranking.order;
  const int m = static_cast<int>(order.size());
  if (m == 0) return {};
  if (m == 1) return {order[0]};
  if (ranking.acceptable_advantage)
    return ranking.acceptable_stability ? std::vector<int>{order[0]} : std::vector<int>{order[0], order[1]};
  const double dq = 1.0 / (m - 1);
  const double lead = ranking.scores[order[0]].Q;
  std::vector<int> set;
  for (int j : order)
    if (ranking.scores[j].Q - lead < dq) set.push_back(j);
  return set;
}

}  // namespace msrcpspr
