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

#include "msrcpspr/pareto.hpp"
#include "msrcpspr/report.hpp"
#include "msrcpspr/vikor.hpp"
#include "support.hpp"

using namespace msrcpspr;
using namespace msrcpspr::testing;

namespace {

const ParetoFront& toy_front() {
  static const ParetoFront front = enumerate_front(toy5());
  return front;
}

int count_of(const std::string& text, const std::string& needle) {
  int n = 0;
  for (auto at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("numbers round-trip in shortest form") {
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(3.0) == "3");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(1.0 / 3) == "0.3333333333333333");
  CHECK(format_number(1e21) == "1e+21");
  for (double x : {13.547619047619047, 2.5e-300, 123456789.125, -7.75})
    CHECK(std::stod(format_number(x)) == x);
}

TEST_CASE("front csv matches the golden file") {
  CHECK(front_csv(toy_front()) == slurp(data_path("golden/toy5_front.csv")));
  const auto timed = front_csv(toy_front(), true);
  CHECK(timed.substr(0, timed.find('\n')) == "grid_point,makespan,cost,slack,solve_status,wall_time");
  CHECK(count_of(timed, "\n") == 6);
}

TEST_CASE("ranking csv") {
  const auto csv = ranking_csv(rank(toy_front()));
  CHECK(csv ==
        "rank,makespan,cost,S,R,Q,in_compromise_set\n"
        "1,14.547619047619047,1460,0.4391061452513967,0.4,0.204945054945055,1\n"
        "2,22,1380,0.5305400372439479,0.33054003724394787,0.3753822629969423,1\n"
        "3,13.547619047619047,1500,0.5,0.5,0.75,0\n"
        "4,26.333333333333332,1300,0.5,0.5,0.75,0\n"
        "5,25.333333333333332,1340,0.5608938547486033,0.46089385474860334,0.8846153846153846,0\n");
}

TEST_CASE("gantt csv and svg") {
  const auto inst = toy5();
  const auto rows = to_gantt(inst, *toy_front().points.front().solution);
  CHECK(gantt_csv(rows) ==
        "activity,start,wait,duration,resources\n"
        "2,0,0.380952380952381,3,1:1\n"
        "3,0,2.5,2,2:2\n"
        "4,4.5,2.5,4,1:1;2:2\n"
        "5,4.5,3.6666666666666665,3,3:2\n"
        "6,11.166666666666666,0.380952380952381,2,1:1\n");
  const auto svg = gantt_svg(rows, "toy <5> & co");
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(count_of(svg, "class=\"work\"") == 5);
  CHECK(count_of(svg, "class=\"wait\"") == 5);
  CHECK(svg.find("toy &lt;5&gt; &amp; co") != std::string::npos);
  CHECK(gantt_svg({}, "empty").find("</svg>") != std::string::npos);
}

TEST_CASE("simulation csv") {
  SimulationRow row;
  row.point = {0.5, reliability(0.5, 0.5, 2.0)};
  row.analytic_wait = 4.0;
  row.estimate.mean_wait = 3.9;
  row.estimate.half_width = 0.05;
  CHECK(row.relative_gap() == doctest::Approx(0.025));
  CHECK(simulation_csv({row}) == "lambda,mu,upsilon,r,analytic_W,sim_W,ci_half_width\n0.5,2,0.5,0.5,4,3.9,0.05\n");
}

TEST_CASE("summary table marks the compromise set") {
  const auto table = summary_table(toy_front(), rank(toy_front()));
  CHECK(count_of(table, "\n") == 6);
  CHECK(count_of(table, " *\n") == 2);
  CHECK(table.find("13.5476") != std::string::npos);
}
