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

#include <algorithm>
#include <random>

#include "msrcpspr/vikor.hpp"

using namespace msrcpspr;

namespace {

// Seven (makespan, cost) alternatives used as a ranking fixture.
const std::vector<ObjectiveValues> kSeven = {{48.86, 7080000}, {52.35, 6740000}, {56.89, 6240000}, {63.71, 6190000},
                                             {72.11, 5760000}, {73.86, 5540000}, {74.11, 4960000}};

std::vector<int> one_based(const std::vector<int>& v) {
  std::vector<int> out;
  for (int i : v) out.push_back(i + 1);
  return out;
}

std::vector<int> q_order(const std::vector<ObjectiveValues>& alts, const VikorOptions& opt = {}) {
  return rank(alts, opt).order;
}

}  // namespace

TEST_CASE("seven-point ranking against the rational recomputation") {
  const auto r = rank(kSeven);
  // Exact fractions from an independent rational-arithmetic recomputation.
  const double S[] = {0.5, 0.48892023164580611, 0.46089669344292922, 0.58415374556323552,
                      0.6490752848869793, 0.63184195778068375, 0.5};
  const double R[] = {0.5, 0.419811320754717, 0.30188679245283018, 0.29405940594059404,
                      0.46039603960396042, 0.49504950495049505, 0.5};
  const double Q[] = {15208.0 / 25183, 421724241.0 / 1110469568, 419.0 / 22048, 131959.0 / 402928,
                      47.0 / 52, 9870513.0 / 10476128, 15208.0 / 25183};
  for (int j = 0; j < 7; ++j) {
    CHECK(r.scores[j].S == doctest::Approx(S[j]).epsilon(1e-12));
    CHECK(r.scores[j].R == doctest::Approx(R[j]).epsilon(1e-12));
    CHECK(r.scores[j].Q == doctest::Approx(Q[j]).epsilon(1e-12));
  }
  CHECK(one_based(r.order) == std::vector<int>{3, 4, 2, 1, 7, 5, 6});
  CHECK(r.scores[2].rank == 1);
  CHECK(r.acceptable_advantage);
  CHECK(r.acceptable_stability);
  CHECK(one_based(r.compromise) == std::vector<int>{3});
  CHECK(r.scores[2].in_compromise_set);
  CHECK(r.warnings.empty());
}

TEST_CASE("two symmetric extremes tie") {
  const auto r = rank(std::vector<ObjectiveValues>{{1, 10}, {2, 5}});
  CHECK(r.scores[0].S == 0.5);
  CHECK(r.scores[1].S == 0.5);
  CHECK(r.scores[0].R == 0.5);
  CHECK(r.scores[0].Q == r.scores[1].Q);
  CHECK_FALSE(r.acceptable_advantage);
  CHECK(r.compromise.size() == 2);
  CHECK(r.order == std::vector<int>{0, 1});  // equal in everything: makespan decides
}

TEST_CASE("an ideal point is ranked first with zero scores") {
  const auto r = rank(std::vector<ObjectiveValues>{{3, 30}, {1, 10}, {2, 40}, {5, 20}});
  CHECK(r.order.front() == 1);
  CHECK(r.scores[1].S == 0);
  CHECK(r.scores[1].R == 0);
  CHECK(r.scores[1].Q == 0);
}

TEST_CASE("compromise when only stability fails") {
  // Found by a randomized search over the rational recomputation.
  const std::vector<ObjectiveValues> alts = {{4, 19}, {15, 9}, {11, 16}, {15, 13}, {12, 12}};
  const auto r = rank(alts);
  CHECK(r.order.front() == 4);
  CHECK(r.scores[4].Q == doctest::Approx(7.0 / 88).epsilon(1e-12));
  CHECK(r.scores[2].Q == doctest::Approx(37.0 / 88).epsilon(1e-12));
  CHECK(r.acceptable_advantage);
  CHECK_FALSE(r.acceptable_stability);
  CHECK(r.compromise == std::vector<int>{4, 2});
  CHECK(select_compromise(r) == r.compromise);
}

TEST_CASE("compromise when the advantage is too small") {
  // DQ = 1/3; Q = (0, 0.3, ...) keeps the two leaders and nothing else.
  const std::vector<ObjectiveValues> alts = {{1, 9}, {3, 6}, {6, 2}, {9, 1}};
  const auto r = rank(alts);
  CHECK_FALSE(r.acceptable_advantage);
  const double best = r.scores[r.order[0]].Q;
  for (int j = 0; j < 4; ++j) {
    const bool inside = r.scores[j].Q - best < 1.0 / 3;
    CHECK(r.scores[j].in_compromise_set == inside);
  }
  CHECK(r.compromise.size() >= 2);
}

TEST_CASE("degenerate criteria") {
  const auto r = rank(std::vector<ObjectiveValues>{{5, 10}, {5, 30}, {5, 20}});
  REQUIRE_FALSE(r.warnings.empty());
  CHECK(r.warnings.front().find("makespan") != std::string::npos);
  CHECK(r.order == std::vector<int>{0, 2, 1});  // cost alone decides
  for (const auto& s : r.scores) CHECK(s.Q >= 0);

  const auto flat = rank(std::vector<ObjectiveValues>{{5, 10}, {5, 10}});
  CHECK(flat.scores[0].Q == 0);
  CHECK(flat.scores[1].Q == 0);
}

TEST_CASE("option validation") {
  VikorOptions bad;
  bad.weights = {0.7, 0.7};
  CHECK_THROWS_AS(rank(kSeven, bad), std::invalid_argument);
  bad.weights = {1.2, -0.2};
  CHECK_THROWS_AS(rank(kSeven, bad), std::invalid_argument);
  VikorOptions v;
  v.v = 1.5;
  CHECK_THROWS_AS(rank(kSeven, v), std::invalid_argument);
  CHECK(rank(std::vector<ObjectiveValues>{}).scores.empty());
}

TEST_CASE("property: v extremes follow S and R") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> m(10, 80), c(1e5, 9e6);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<ObjectiveValues> alts(std::uniform_int_distribution<int>(2, 9)(rng));
    for (auto& a : alts) a = {m(rng), c(rng)};
    VikorOptions s_only, r_only;
    s_only.v = 1;
    r_only.v = 0;
    const auto by_s = rank(alts, s_only);
    const auto by_r = rank(alts, r_only);
    for (std::size_t p = 1; p < alts.size(); ++p) {
      CHECK(by_s.scores[by_s.order[p - 1]].S <= by_s.scores[by_s.order[p]].S);
      CHECK(by_r.scores[by_r.order[p - 1]].R <= by_r.scores[by_r.order[p]].R);
    }
  }
}

TEST_CASE("property: permutation and affine invariance") {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> m(10, 80), c(1e5, 9e6), scale(0.01, 1000), shift(-500, 500);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 9)(rng);
    std::vector<ObjectiveValues> alts(n);
    for (auto& a : alts) a = {m(rng), c(rng)};
    const auto base = rank(alts);

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<ObjectiveValues> shuffled(n);
    for (int j = 0; j < n; ++j) shuffled[perm[j]] = alts[j];
    const auto moved = rank(shuffled);
    for (int j = 0; j < n; ++j) {
      CHECK(moved.scores[perm[j]].Q == doctest::Approx(base.scores[j].Q).epsilon(1e-12));
      CHECK(moved.scores[perm[j]].S == doctest::Approx(base.scores[j].S).epsilon(1e-12));
    }

    const double a = scale(rng), b = shift(rng);
    auto stretched = alts;
    for (auto& x : stretched) x.cost = a * x.cost + b;
    const auto affine = rank(stretched);
    for (int j = 0; j < n; ++j) CHECK(affine.scores[j].Q == doctest::Approx(base.scores[j].Q).epsilon(1e-9));
    CHECK(affine.order == base.order);
  }
}

TEST_CASE("property: worsening an alternative never improves its rank") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> m(10, 80), c(1e5, 9e6);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 9)(rng);
    std::vector<ObjectiveValues> alts(n);
    for (auto& a : alts) a = {m(rng), c(rng)};
    const int j = std::uniform_int_distribution<int>(0, n - 1)(rng);
    const auto before = rank(alts).scores[j].rank;
    auto worse = alts;
    if (trial % 2) worse[j].makespan += 5;
    else worse[j].cost += 4e5;
    CHECK(rank(worse).scores[j].rank >= before);
  }
}
