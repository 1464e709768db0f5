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

#ifndef MSRCPSPR_REPORT_HPP_
#define MSRCPSPR_REPORT_HPP_

#include <string>
#include <vector>

#include "msrcpspr/front.hpp"
#include "msrcpspr/queueing.hpp"
#include "msrcpspr/schedule.hpp"
#include "msrcpspr/sensitivity.hpp"
#include "msrcpspr/vikor.hpp"

namespace msrcpspr {

// Every CSV below: comma separated, header row, LF line ends, numbers in
// the shortest form that reads back to the same double.

std::string format_number(double value);

/// grid_point,makespan,cost,slack,solve_status,wall_time
/// wall_time is written as 0 unless `timing` is set, to keep runs byte-identical.
std::string front_csv(const ParetoFront& front, bool timing = false);

/// rank,makespan,cost,S,R,Q,in_compromise_set (rows in rank order)
std::string ranking_csv(const VikorRanking& ranking);

/// activity,start,wait,duration,resources ("k:l;k:l", 1-based)
std::string gantt_csv(const std::vector<GanttRow>& rows);

/// One bar per activity; the wait block follows processing in a lighter fill.
std::string gantt_svg(const std::vector<GanttRow>& rows, const std::string& title);

struct SimulationRow {
  QueueOperatingPoint point;
  double analytic_wait = 0.0;
  SimEstimate estimate;

  /// |sim - analytic| / analytic
  double relative_gap() const;
};

/// lambda,mu,upsilon,r,analytic_W,sim_W,ci_half_width
std::string simulation_csv(const std::vector<SimulationRow>& rows);

/// multiplier,point,base_makespan,base_cost,scaled_makespan,scaled_cost,
/// makespan_change_pct,cost_change_pct,status
/// Per multiplier, a "pis" row compares ideal values, then fronts are paired
/// by position (1-based, ascending makespan). Unpaired or infeasible sides
/// leave their cells empty and say so in `status`.
std::string sweep_csv(const SweepReport& report);

/// Fixed-width text table: point, makespan, cost, S, R, Q, compromise flag.
std::string summary_table(const ParetoFront& front, const VikorRanking& ranking);

}  // namespace msrcpspr

#endif  // MSRCPSPR_REPORT_HPP_
