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

#ifndef MSRCPSPR_SOLVER_HPP_
#define MSRCPSPR_SOLVER_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "msrcpspr/front.hpp"
#include "msrcpspr/instance.hpp"
#include "msrcpspr/schedule.hpp"

namespace msrcpspr {

namespace detail {
struct SolverModel;
}  // namespace detail

enum class Objective { Makespan, Cost };

/// Reward eps * slack / range added to the primary objective.
struct Augmentation {
  double eps = 1e-4;
  double range = 1.0;  // range of the budgeted objective over the payoff table
};

/// min primary - eps*slack/range  s.t.  secondary + slack = budget, slack >= 0
struct SubproblemSpec {
  Objective primary = Objective::Makespan;
  std::optional<double> budget;
  std::optional<Augmentation> augmentation;  // only meaningful with a budget
};

struct SolveLimits {
  double time_seconds = 300.0;
  std::uint64_t node_limit = 0;  // 0 = unlimited
};

struct SolveResult {
  SolveStatus status = SolveStatus::Infeasible;
  std::optional<ScheduleSolution> solution;
  std::optional<ObjectiveValues> objectives;
  double slack = 0.0;
  std::uint64_t nodes_explored = 0;
  double wall_time = 0.0;
};

/// Exact depth-first branch and bound. Assignments are branched per activity
/// in topological order (candidate resource sets by cost, then ids); every
/// leaf assignment fixes lambda and therefore W and T, after which resource
/// conflicts are sequenced earliest-first. Unstable loads are pruned.
///
/// The instance must outlive the solver.
class Solver {
 public:
  explicit Solver(const ProjectInstance& instance);
  ~Solver();
  Solver(const Solver&) = delete;
  Solver& operator=(const Solver&) = delete;

  SolveResult solve(const SubproblemSpec& spec, const SolveLimits& limits = {}) const;
  const ProjectInstance& instance() const;

 private:
  std::unique_ptr<detail::SolverModel> model_;
};

SolveResult solve(const ProjectInstance& instance, const SubproblemSpec& spec, const SolveLimits& limits = {});

struct LexicographicResult {
  SolveStatus status = SolveStatus::Infeasible;
  ObjectiveValues values;
  std::optional<ScheduleSolution> solution;
  std::uint64_t nodes_explored = 0;
  double wall_time = 0.0;
};

/// Optimizes `first`, then the other objective with `first` held at its optimum.
LexicographicResult lexicographic_optimum(const Solver& solver, Objective first, const SolveLimits& limits = {});
LexicographicResult lexicographic_optimum(const ProjectInstance& instance, Objective first,
                                          const SolveLimits& limits = {});

/// Longest source-to-sink path over durations alone.
double critical_path_bound(const ProjectInstance& instance);

/// Makespan lower bound once X is fixed: the larger of the critical path with
/// exact T_i and, per resource, earliest head + sum(d_i + T_i) + shortest tail
/// of the activities that must be chained on it. Throws InstabilityError.
double assignment_makespan_bound(const ProjectInstance& instance, const AssignmentTensor& assignment);

/// Exhaustive enumeration oracle: every assignment satisfying the skill,
/// one-skill and mastery relations, every orientation of every resource
/// conflict, starts via tighten_starts. Refuses instances with more than 6
/// executable activities, 4 resources or 3 skills (std::invalid_argument).
ParetoFront brute_force_front(const ProjectInstance& instance);

}  // namespace msrcpspr

#endif  // MSRCPSPR_SOLVER_HPP_
