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

#include "msrcpspr/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <optional>

namespace msrcpspr {
namespace {

std::string percent_change(double base, double scaled) {
  if (base == 0.0) return scaled == 0.0 ? "0" : "";
  return format_number((scaled - base) / base * 100.0);
}

std::string escape_xml(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string fixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  return buf;
}

}  // namespace

std::string format_number(double value) {
  if (value == 0.0) return "0";  // also folds -0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

std::string front_csv(const ParetoFront& front, bool timing) {
  std::string out = "grid_point,makespan,cost,slack,solve_status,wall_time\n";
  for (const auto& p : front.points) {
    out += std::to_string(p.grid_index) + ',' + format_number(p.makespan) + ',' + format_number(p.cost) + ',' +
           format_number(p.slack) + ',' + status_name(p.status) + ',' +
           (timing ? format_number(p.wall_time) : std::string("0")) + '\n';
  }
  return out;
}

std::string ranking_csv(const VikorRanking& ranking) {
  std::string out = "rank,makespan,cost,S,R,Q,in_compromise_set\n";
  for (int j : ranking.order) {
    const auto& s = ranking.scores[j];
    out += std::to_string(s.rank) + ',' + format_number(s.makespan) + ',' + format_number(s.cost) + ',' +
           format_number(s.S) + ',' + format_number(s.R) + ',' + format_number(s.Q) + ',' +
           (s.in_compromise_set ? "1" : "0") + '\n';
  }
  return out;
}

std::string gantt_csv(const std::vector<GanttRow>& rows) {
  std::string out = "activity,start,wait,duration,resources\n";
  for (const auto& row : rows) {
    std::string res;
    for (auto [k, l] : row.resources) {
      if (!res.empty()) res += ';';
      res += std::to_string(k) + ':' + std::to_string(l);
    }
    out += std::to_string(row.activity) + ',' + format_number(row.start) + ',' + format_number(row.wait) + ',' +
           std::to_string(row.duration) + ',' + res + '\n';
  }
  return out;
}

std::string gantt_svg(const std::vector<GanttRow>& rows, const std::string& title) {
  constexpr double kLeft = 70, kTop = 40, kRow = 26, kBar = 18, kWidth = 720;
  double horizon = 1.0;
  for (const auto& row : rows) horizon = std::max(horizon, row.finish());
  const double scale = kWidth / horizon;
  const double height = kTop + kRow * rows.size() + 40;
  const double width = kLeft + kWidth + 30;

  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fixed(width, 0) + "\" height=\"" +
                    fixed(height, 0) + "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg += "<text x=\"" + fixed(kLeft, 0) + "\" y=\"20\" font-size=\"14\">" + escape_xml(title) + "</text>\n";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& row = rows[r];
    const double y = kTop + kRow * r;
    svg += "<text x=\"8\" y=\"" + fixed(y + 13, 1) + "\">act " + std::to_string(row.activity) + "</text>\n";
    svg += "<rect class=\"work\" x=\"" + fixed(kLeft + row.start * scale, 2) + "\" y=\"" + fixed(y, 1) +
           "\" width=\"" + fixed(row.duration * scale, 2) + "\" height=\"" + fixed(kBar, 0) +
           "\" fill=\"#3b6ea5\"/>\n";
    if (row.wait > 0)
      svg += "<rect class=\"wait\" x=\"" + fixed(kLeft + (row.start + row.duration) * scale, 2) + "\" y=\"" +
             fixed(y, 1) + "\" width=\"" + fixed(row.wait * scale, 2) + "\" height=\"" + fixed(kBar, 0) +
             "\" fill=\"#b9cfe6\"/>\n";
  }
  const double axis = kTop + kRow * rows.size() + 8;
  svg += "<line x1=\"" + fixed(kLeft, 0) + "\" y1=\"" + fixed(axis, 1) + "\" x2=\"" + fixed(kLeft + kWidth, 0) +
         "\" y2=\"" + fixed(axis, 1) + "\" stroke=\"#000\"/>\n";
  const double tick = std::max(1.0, std::pow(10.0, std::floor(std::log10(horizon))) / 2);
  for (double t = 0; t <= horizon + 1e-9; t += tick) {
    const double x = kLeft + t * scale;
    svg += "<text x=\"" + fixed(x, 2) + "\" y=\"" + fixed(axis + 16, 1) + "\" text-anchor=\"middle\">" +
           format_number(t) + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

double SimulationRow::relative_gap() const { return std::fabs(estimate.mean_wait - analytic_wait) / analytic_wait; }

std::string simulation_csv(const std::vector<SimulationRow>& rows) {
  std::string out = "lambda,mu,upsilon,r,analytic_W,sim_W,ci_half_width\n";
  for (const auto& row : rows) {
    const auto& p = row.point.params;
    out += format_number(row.point.arrival_rate) + ',' + format_number(p.service_rate) + ',' +
           format_number(p.disruption_rate) + ',' + format_number(p.retrieval_rate) + ',' +
           format_number(row.analytic_wait) + ',' + format_number(row.estimate.mean_wait) + ',' +
           format_number(row.estimate.half_width) + '\n';
  }
  return out;
}

std::string sweep_csv(const SweepReport& report) {
  std::string out =
      "multiplier,point,base_makespan,base_cost,scaled_makespan,scaled_cost,makespan_change_pct,cost_change_pct,"
      "status\n";
  const auto& base = report.base;
  for (const auto& sc : report.scenarios) {
    const std::string mult = format_number(sc.multiplier);
    auto emit = [&](const std::string& label, std::optional<ObjectiveValues> b, std::optional<ObjectiveValues> s,
                    std::string status) {
      out += mult + ',' + label + ',';
      out += b ? format_number(b->makespan) + ',' + format_number(b->cost) + ',' : std::string(",,");
      out += s ? format_number(s->makespan) + ',' + format_number(s->cost) + ',' : std::string(",,");
      if (b && s) out += percent_change(b->makespan, s->makespan) + ',' + percent_change(b->cost, s->cost) + ',';
      else out += ",,";
      out += status + '\n';
    };
    auto status_of = [&](bool has_b, bool has_s, SolveStatus sb, SolveStatus ss) {
      if (!has_b) return base.points.empty() ? std::string("base_infeasible") : std::string("missing_base");
      if (!has_s) return sc.front.points.empty() ? std::string("scaled_infeasible") : std::string("missing_scaled");
      if (sb == SolveStatus::Timeout || ss == SolveStatus::Timeout) return std::string("timeout");
      return std::string("ok");
    };
    {
      std::optional<ObjectiveValues> b, s;
      if (!base.points.empty()) b = base.payoff.pis;
      if (!sc.front.points.empty()) s = sc.front.payoff.pis;
      emit("pis", b, s, status_of(b.has_value(), s.has_value(), SolveStatus::Optimal, SolveStatus::Optimal));
    }
    const std::size_t count = std::max(base.points.size(), sc.front.points.size());
    for (std::size_t p = 0; p < count; ++p) {
      std::optional<ObjectiveValues> b, s;
      SolveStatus sb = SolveStatus::Optimal, ss = SolveStatus::Optimal;
      if (p < base.points.size()) {
        b = ObjectiveValues{base.points[p].makespan, base.points[p].cost};
        sb = base.points[p].status;
      }
      if (p < sc.front.points.size()) {
        s = ObjectiveValues{sc.front.points[p].makespan, sc.front.points[p].cost};
        ss = sc.front.points[p].status;
      }
      emit(std::to_string(p + 1), b, s, status_of(b.has_value(), s.has_value(), sb, ss));
    }
  }
  return out;
}

std::string summary_table(const ParetoFront& front, const VikorRanking& ranking) {
  std::string out;
  char line[256];
  std::snprintf(line, sizeof line, "%-6s %-6s %14s %16s %10s %10s %10s %s\n", "point", "grid", "makespan", "cost", "S",
                "R", "Q", "compromise");
  out += line;
  for (std::size_t j = 0; j < front.points.size(); ++j) {
    const auto& p = front.points[j];
    const VikorScore* s = j < ranking.scores.size() ? &ranking.scores[j] : nullptr;
    std::snprintf(line, sizeof line, "%-6zu %-6d %14.4f %16.2f %10.4f %10.4f %10.4f %s\n", j + 1, p.grid_index,
                  p.makespan, p.cost, s ? s->S : 0.0, s ? s->R : 0.0, s ? s->Q : 0.0,
                  s && s->in_compromise_set ? "*" : "");
    out += line;
  }
  return out;
}

}  // namespace msrcpspr
