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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>
#include <random>

#include "msrcpspr/schedule.hpp"
#include "msrcpspr/solver.hpp"
#include "support.hpp"

using namespace msrcpspr;
using namespace msrcpspr::testing;

namespace {

constexpr double kTol = 1e-9;

// Best makespan among enumerated points whose cost fits the budget.
double best_makespan(const ParetoFront& front, double budget) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : front.points)
    if (p.cost <= budget + kTol) best = std::min(best, p.makespan);
  return best;
}

SubproblemSpec bounded(Objective primary, double budget) {
  SubproblemSpec spec;
  spec.primary = primary;
  spec.budget = budget;
  return spec;
}

}  // namespace

TEST_CASE("single activity picks the cheaper master") {
  auto cheap = resource(1, {{0, 100.0}}, reliability(0.5, 0.5, 12));
  auto dear = resource(2, {{0, 200.0}}, reliability(0.5, 0.5, 12));
  const auto inst = make_instance({5}, {}, {cheap, dear}, {{{0, 1}}}, 1);
  SubproblemSpec spec;
  spec.primary = Objective::Cost;
  const auto res = solve(inst, spec);
  REQUIRE(res.status == SolveStatus::Optimal);
  CHECK(res.objectives->cost == 500);
  CHECK(res.solution->assignment(1, 0, 0));
  CHECK(check_feasibility(inst, *res.solution).empty());
}

TEST_CASE("toy5 single-objective optima") {
  const auto inst = toy5();
  const Solver solver(inst);
  const auto fast = solver.solve({});
  REQUIRE(fast.status == SolveStatus::Optimal);
  CHECK(fast.objectives->makespan == doctest::Approx(13.547619047619047).epsilon(1e-12));

  const auto lex = lexicographic_optimum(solver, Objective::Cost);
  REQUIRE(lex.status == SolveStatus::Optimal);
  CHECK(lex.values.cost == 1300);
  CHECK(lex.values.makespan == doctest::Approx(26.333333333333332).epsilon(1e-12));

  const auto mid = solver.solve(bounded(Objective::Makespan, 1400));
  REQUIRE(mid.status == SolveStatus::Optimal);
  CHECK(mid.objectives->makespan == doctest::Approx(22.0).epsilon(1e-12));
  CHECK(mid.slack == doctest::Approx(20.0));
}

TEST_CASE("a budget below the cheapest schedule is infeasible") {
  const auto inst = toy5();
  const auto res = solve(inst, bounded(Objective::Makespan, 1299));
  CHECK(res.status == SolveStatus::Infeasible);
  CHECK_FALSE(res.solution.has_value());
  CHECK(solve(inst, bounded(Objective::Cost, 13.0)).status == SolveStatus::Infeasible);
}

TEST_CASE("limits") {
  const auto inst = j10();
  SolveLimits tight;
  tight.node_limit = 1;
  const auto res = solve(inst, {}, tight);
  CHECK(res.status == SolveStatus::Timeout);
  CHECK(res.nodes_explored <= 256);

  SubproblemSpec bad = bounded(Objective::Makespan, 10);
  bad.augmentation = Augmentation{1.0, 1.0};
  CHECK_THROWS_AS(solve(inst, bad), std::invalid_argument);
  CHECK_THROWS_AS(solve(inst, bounded(Objective::Makespan, -1)), std::invalid_argument);
}

TEST_CASE("brute force refuses large instances") {
  CHECK_THROWS_AS(brute_force_front(j10()), std::invalid_argument);
  CHECK_NOTHROW(brute_force_front(toy5()));
}

TEST_CASE("repeated solves return the same schedule") {
  const auto inst = j10();
  const Solver solver(inst);
  const auto a = solver.solve(bounded(Objective::Makespan, 920000));
  const auto b = solver.solve(bounded(Objective::Makespan, 920000));
  REQUIRE(a.status == SolveStatus::Optimal);
  CHECK(a.solution->starts == b.solution->starts);
  CHECK(a.solution->assignment == b.solution->assignment);
  CHECK(a.nodes_explored == b.nodes_explored);
}

TEST_CASE("property: branch and bound agrees with enumeration") {
  std::mt19937_64 rng(17);
  int compared = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const auto inst = random_instance(rng);
    const auto oracle = brute_force_front(inst);
    const Solver solver(inst);
    const auto fast = solver.solve({});
    if (oracle.points.empty()) {
      CHECK(fast.status == SolveStatus::Infeasible);
      continue;
    }
    ++compared;
    REQUIRE(fast.status == SolveStatus::Optimal);
    CHECK(fast.objectives->makespan == doctest::Approx(oracle.points.front().makespan).epsilon(kTol));
    SubproblemSpec cheapest;
    cheapest.primary = Objective::Cost;
    const auto low = solver.solve(cheapest);
    REQUIRE(low.status == SolveStatus::Optimal);
    CHECK(low.objectives->cost == doctest::Approx(oracle.points.back().cost).epsilon(kTol));
    CHECK(check_feasibility(inst, *low.solution).empty());
    // Every oracle cost level as a budget.
    double previous = 0.0;
    for (const auto& p : oracle.points) {
      const auto res = solver.solve(bounded(Objective::Makespan, p.cost));
      REQUIRE(res.status == SolveStatus::Optimal);
      CHECK(res.objectives->makespan == doctest::Approx(best_makespan(oracle, p.cost)).epsilon(kTol));
      CHECK(res.objectives->cost <= p.cost + kTol);
      CHECK(res.objectives->makespan >= previous - kTol);  // tighter budgets never help
      previous = res.objectives->makespan;
    }
  }
  CHECK(compared >= 30);
}

TEST_CASE("property: bounds never exceed a realised makespan") {
  std::mt19937_64 rng(3);
  int checked = 0;
  for (int trial = 0; trial < 500; ++trial) {
    GeneratorLimits lim;
    lim.max_activities = 8;
    lim.service_floor = 20;
    const auto inst = random_instance(rng, lim);
    AssignmentTensor X;
    BoolMatrix Z;
    if (!random_completion(inst, rng, X, Z) || !stable_load(inst, X)) continue;
    const double realised = evaluate(inst, tighten_starts(inst, X, Z)).makespan;
    CHECK(critical_path_bound(inst) <= realised + kTol);
    CHECK(assignment_makespan_bound(inst, X) <= realised + kTol);
    ++checked;
  }
  CHECK(checked > 300);
}
