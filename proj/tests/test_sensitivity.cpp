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

#include "msrcpspr/report.hpp"
#include "msrcpspr/sensitivity.hpp"
#include "support.hpp"

using namespace msrcpspr;
using namespace msrcpspr::testing;

namespace {

constexpr double kTol = 1e-9;

// Ideal values move the way the waiting time does: slower recovery or more
// frequent breakdowns can only lengthen waits and shrink the stable set.
void check_directions(const SweepReport& report) {
  REQUIRE_FALSE(report.base.points.empty());
  const auto& base = report.base.payoff.pis;
  const bool harsher_up = report.parameter == SweepParameter::Disruption;
  for (const auto& s : report.scenarios) {
    if (s.front.points.empty()) {
      CHECK(((s.multiplier > 1) == harsher_up));  // only a harsher setting can lose every schedule
      continue;
    }
    const auto& pis = s.front.payoff.pis;
    const bool harsher = (s.multiplier > 1) == harsher_up;
    if (harsher) {
      CHECK(pis.makespan >= base.makespan - kTol);
      CHECK(pis.cost >= base.cost - kTol);
    } else {
      CHECK(pis.makespan <= base.makespan + kTol);
      CHECK(pis.cost <= base.cost + kTol);
    }
  }
}

}  // namespace

TEST_CASE("toy5 sweeps") {
  const auto inst = toy5();
  const auto up = sensitivity_sweep(inst, SweepParameter::Disruption, {0.6, 1.4});
  REQUIRE(up.scenarios.size() == 2);
  CHECK(up.scenarios[0].multiplier == 0.6);
  check_directions(up);
  CHECK(up.scenarios[1].front.payoff.pis.makespan == doctest::Approx(16.89163207148888).epsilon(1e-12));

  const auto r = sensitivity_sweep(inst, SweepParameter::Retrieval, {0.6, 0.8, 1.2, 1.4}, {}, 3);
  check_directions(r);
  CHECK(r.scenarios.back().front.payoff.pis.makespan < r.base.payoff.pis.makespan);
  CHECK(std::string(parameter_name(SweepParameter::Retrieval)) == "retrieval");
}

TEST_CASE("worker count does not change the report") {
  const auto inst = toy5();
  const auto one = sensitivity_sweep(inst, SweepParameter::Retrieval, {0.7, 1.3}, {}, 1);
  const auto many = sensitivity_sweep(inst, SweepParameter::Retrieval, {0.7, 1.3}, {}, 4);
  CHECK(sweep_csv(one) == sweep_csv(many));
}

TEST_CASE("invalid multipliers") {
  CHECK_THROWS_AS(sensitivity_sweep(toy5(), SweepParameter::Disruption, {0.0}), std::invalid_argument);
  CHECK_THROWS_AS(sensitivity_sweep(toy5(), SweepParameter::Disruption, {-1.0}), std::invalid_argument);
}

TEST_CASE("property: sweep directions on random instances") {
  std::mt19937_64 rng(77);
  int swept = 0;
  for (int trial = 0; trial < 25; ++trial) {
    const auto inst = random_instance(rng);
    FrontOptions opt;
    opt.grid_count = 4;
    const auto d = sensitivity_sweep(inst, SweepParameter::Disruption, {0.6, 1.4}, opt);
    if (d.base.points.empty()) continue;
    check_directions(d);
    check_directions(sensitivity_sweep(inst, SweepParameter::Retrieval, {0.6, 1.4}, opt));
    ++swept;
  }
  CHECK(swept >= 15);
}
