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

#include <random>

#include "msrcpspr/pareto.hpp"
#include "msrcpspr/solver.hpp"
#include "support.hpp"

using namespace msrcpspr;
using namespace msrcpspr::testing;

namespace {

constexpr double kTol = 1e-9;

ParetoPoint pt(double m, double c) {
  ParetoPoint p;
  p.makespan = m;
  p.cost = c;
  return p;
}

bool same_point(const ParetoPoint& a, const ParetoPoint& b) {
  return std::abs(a.makespan - b.makespan) <= kTol * (1 + std::abs(a.makespan)) &&
         std::abs(a.cost - b.cost) <= kTol * (1 + std::abs(a.cost));
}

bool contains(const ParetoFront& front, const ParetoPoint& p) {
  for (const auto& q : front.points)
    if (same_point(p, q)) return true;
  return false;
}

bool covered(const ParetoFront& front, const ParetoPoint& p) {
  for (const auto& q : front.points)
    if (q.makespan <= p.makespan + kTol && q.cost <= p.cost + kTol) return true;
  return false;
}

void check_same(const ParetoFront& a, const ParetoFront& b) {
  REQUIRE(a.points.size() == b.points.size());
  for (std::size_t i = 0; i < a.points.size(); ++i) CHECK(same_point(a.points[i], b.points[i]));
}

}  // namespace

TEST_CASE("dominance filter") {
  const auto kept = dominance_filter({pt(3, 3), pt(1, 5), pt(2, 3), pt(1, 5), pt(1, 6), pt(4, 1)});
  REQUIRE(kept.size() == 3);
  CHECK(kept[0].makespan == 1);
  CHECK(kept[0].cost == 5);
  CHECK(kept[1].makespan == 2);
  CHECK(kept[2].cost == 1);
  CHECK(dominance_filter({}).empty());
  // Makespans that differ only by rounding count as equal.
  const auto near = dominance_filter({pt(9.2580514102979894, 1610), pt(9.2580514102979912, 1600)});
  REQUIRE(near.size() == 1);
  CHECK(near[0].cost == 1600);
}

TEST_CASE("toy5 front matches enumeration") {
  const auto inst = toy5();
  const auto oracle = brute_force_front(inst);
  const auto front = enumerate_front(inst);
  check_same(front, oracle);
  std::vector<int> grid;
  for (const auto& p : front.points) grid.push_back(p.grid_index);
  CHECK(grid == std::vector<int>{0, 1, 3, 7, 9});
  CHECK(front.payoff.pis == ObjectiveValues{13.547619047619047, 1300});
  CHECK(front.payoff.nis.cost == 1500);
  CHECK(front.payoff.nis.makespan == doctest::Approx(26.333333333333332).epsilon(1e-14));
  CHECK(front.diagnosis.empty());
}

TEST_CASE("degenerate cost range gives a single point") {
  auto r1 = resource(1, {{0, 50.0}}, reliability(0.5, 0.5, 12));
  const auto inst = make_instance({4, 2}, {}, {r1}, {{{0, 1}}, {{0, 1}}}, 1);
  const auto front = enumerate_front(inst);
  REQUIRE(front.points.size() == 1);
  CHECK(front.points[0].cost == 300);
}

TEST_CASE("option validation and partial fronts") {
  const auto inst = toy5();
  FrontOptions bad;
  bad.grid_count = 1;
  CHECK_THROWS_AS(enumerate_front(inst, bad), std::invalid_argument);
  bad.grid_count = 10;
  bad.eps = 0.5;
  CHECK_THROWS_AS(enumerate_front(inst, bad), std::invalid_argument);

  FrontOptions starved;
  starved.limits.node_limit = 1;
  const auto partial = enumerate_front(j10(), starved);
  CHECK_FALSE(partial.diagnosis.empty());
}

TEST_CASE("unmet demand yields an empty front with a reason") {
  auto r1 = resource(1, {{0, 50.0}}, reliability(0.5, 0.5, 12));
  const auto inst = make_instance({4}, {}, {r1}, {{{0, 2}}}, 1);
  const auto front = enumerate_front(inst);
  CHECK(front.points.empty());
  CHECK(front.diagnosis.find("infeasible") != std::string::npos);
}

TEST_CASE("property: fronts on random instances") {
  std::mt19937_64 rng(41);
  int nontrivial = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const auto inst = random_instance(rng);
    const auto oracle = brute_force_front(inst);
    if (oracle.points.empty()) continue;
    const Solver solver(inst);
    FrontOptions opt;
    opt.grid_count = 8;
    const auto front = enumerate_front(solver, opt);
    if (oracle.points.size() > 1) ++nontrivial;

    // Only efficient points, and both extremes.
    for (const auto& p : front.points) CHECK(contains(oracle, p));
    CHECK(same_point(front.points.front(), oracle.points.front()));
    CHECK(same_point(front.points.back(), oracle.points.back()));

    // Skipping levels loses nothing.
    FrontOptions full = opt;
    full.bypass = false;
    const auto unskipped = enumerate_front(solver, full);
    check_same(front, unskipped);

    // Concurrent grid workers give the same answer.
    full.threads = 4;
    check_same(enumerate_front(solver, full), unskipped);

    // Halving the step keeps every point.
    FrontOptions fine = opt;
    fine.grid_count = 16;
    const auto refined = enumerate_front(solver, fine);
    for (const auto& p : front.points) CHECK(contains(refined, p));

    // Plain sweeps never find anything better.
    FrontOptions plain = opt;
    plain.augmented = false;
    for (const auto& p : enumerate_front(solver, plain).points) CHECK(covered(front, p));
  }
  CHECK(nontrivial >= 5);
}

TEST_CASE("thread limit from the environment") {
  ::setenv("MSRCPSPR_THREADS", "3", 1);
  CHECK(thread_limit() == 3);
  ::setenv("MSRCPSPR_THREADS", "0", 1);
  CHECK(thread_limit(2) == 2);
  CHECK(thread_limit(0) == 1);
  ::unsetenv("MSRCPSPR_THREADS");
  CHECK(thread_limit(2) == 2);
}
