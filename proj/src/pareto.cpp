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

#include "msrcpspr/pareto.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "parallel.hpp"

namespace msrcpspr {
namespace {

ParetoPoint to_point(const SolveResult& r, int grid_index) {
  ParetoPoint p;
  p.makespan = r.objectives->makespan;
  p.cost = r.objectives->cost;
  p.slack = r.slack;
  p.grid_index = grid_index;
  p.status = r.status;
  p.wall_time = r.wall_time;
  p.solution = std::make_shared<const ScheduleSolution>(*r.solution);
  return p;
}

}  // namespace

int thread_limit(int fallback) {
  if (const char* env = std::getenv("MSRCPSPR_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<int>(std::min<long>(v, 256));
  }
  return std::max(1, fallback);
}

ParetoFront enumerate_front(const Solver& solver, const FrontOptions& options) {
  if (options.grid_count < 2) throw std::invalid_argument("grid count must be >= 2");
  if (!(options.eps >= 1e-6 && options.eps <= 1e-3)) throw std::invalid_argument("eps must lie in [1e-6, 1e-3]");

  ParetoFront front;
  front.grid_count = options.grid_count;
  const auto row1 = lexicographic_optimum(solver, Objective::Makespan, options.limits);
  if (row1.status == SolveStatus::Infeasible) {
    front.diagnosis = "infeasible: no stable assignment satisfies every skill requirement";
    return front;
  }
  const auto row2 = lexicographic_optimum(solver, Objective::Cost, options.limits);
  if (!row1.solution || !row2.solution) {
    front.diagnosis = "timeout while building the payoff table";
    return front;
  }
  front.payoff.makespan_first = row1.values;
  front.payoff.cost_first = row2.values;
  front.payoff.pis = {row1.values.makespan, row2.values.cost};
  front.payoff.nis = {row2.values.makespan, row1.values.cost};
  if (row1.status == SolveStatus::Timeout || row2.status == SolveStatus::Timeout)
    front.diagnosis = "payoff table incomplete: lexicographic solve timed out";

  const double lo = front.payoff.pis.cost;
  const double hi = front.payoff.nis.cost;
  const double range = hi - lo;
  if (!(range > 1e-9 * (1.0 + std::fabs(hi)))) {
    // Both lexicographic optima coincide in cost, hence in makespan too.
    ParetoPoint p;
    p.makespan = row1.values.makespan;
    p.cost = row1.values.cost;
    p.grid_index = 0;
    p.status = row1.status;
    p.wall_time = row1.wall_time + row2.wall_time;
    p.solution = std::make_shared<const ScheduleSolution>(*row1.solution);
    front.points.push_back(std::move(p));
    return front;
  }

  const int n = options.grid_count;
  const double step = range / n;
  auto level = [&](int p) { return p == n ? lo : hi - step * p; };
  auto spec_for = [&](int p) {
    SubproblemSpec spec;
    spec.primary = Objective::Makespan;
    spec.budget = level(p);
    if (options.augmented) spec.augmentation = Augmentation{options.eps, range};
    return spec;
  };

  std::vector<ParetoPoint> found;
  bool partial = false;
  const bool bypass = options.augmented && options.bypass;
  if (bypass || options.threads <= 1) {
    for (int p = 0; p <= n; ++p) {
      const SolveResult r = solver.solve(spec_for(p), options.limits);
      if (r.status == SolveStatus::Infeasible) break;  // tighter budgets stay infeasible
      if (r.status == SolveStatus::Timeout) partial = true;
      if (!r.objectives) continue;
      found.push_back(to_point(r, p));
      if (bypass && r.status == SolveStatus::Optimal) p += static_cast<int>(std::floor(r.slack / step + 1e-9));
    }
  } else {
    std::vector<SolveResult> results(n + 1);
    internal::parallel_for(n + 1, options.threads,
                           [&](int p) { results[p] = solver.solve(spec_for(p), options.limits); });
    for (int p = 0; p <= n; ++p) {
      const SolveResult& r = results[p];
      if (r.status == SolveStatus::Infeasible) break;
      if (r.status == SolveStatus::Timeout) partial = true;
      if (r.objectives) found.push_back(to_point(r, p));
    }
  }
  if (partial && front.diagnosis.empty()) front.diagnosis = "partial front: some grid points timed out";
  front.points = dominance_filter(std::move(found));
  return front;
}

ParetoFront enumerate_front(const ProjectInstance& instance, const FrontOptions& options) {
  return enumerate_front(Solver(instance), options);
}

}  // namespace msrcpspr
