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

#include "msrcpspr/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "msrcpspr/errors.hpp"
#include "msrcpspr/queueing.hpp"

namespace msrcpspr {
namespace {

constexpr double kTolerance = 1e-9;

bool close(double a, double b) { return std::fabs(a - b) <= kTolerance * (1.0 + std::fabs(b)); }

std::string id_list(const std::vector<int>& indices) {
  std::string out;
  for (int v : indices) {
    if (!out.empty()) out += ',';
    out += std::to_string(v + 1);
  }
  return out;
}

}  // namespace

int AssignmentTensor::skills_on(int i, int k) const {
  int count = 0;
  for (int l = 0; l < s_; ++l) count += (*this)(i, l, k) ? 1 : 0;
  return count;
}

ScheduleSolution ScheduleSolution::empty_for(const ProjectInstance& instance) {
  const int n = instance.activity_count();
  const int r = instance.resource_count();
  ScheduleSolution s;
  s.assignment = AssignmentTensor(instance);
  s.sequencing = BoolMatrix(n, n);
  s.usage = BoolMatrix(n, r);
  s.arrival_rates.assign(r, 0.0);
  s.waits.assign(r, 0.0);
  s.activity_waits.assign(n, 0.0);
  s.starts.assign(n, 0.0);
  return s;
}

const char* constraint_name(Constraint c) {
  switch (c) {
    case Constraint::SkillRequirement: return "skill_requirement";
    case Constraint::OneSkillPerResource: return "one_skill_per_resource";
    case Constraint::SequencingAntisymmetry: return "sequencing_antisymmetry";
    case Constraint::ResourceDisjunction: return "resource_disjunction";
    case Constraint::ArrivalRate: return "arrival_rate";
    case Constraint::WaitingTime: return "waiting_time";
    case Constraint::WaitLinking: return "wait_linking";
    case Constraint::Precedence: return "precedence";
    case Constraint::SkillMastery: return "skill_mastery";
    case Constraint::Domain: return "domain";
  }
  return "unknown";
}

std::string Violation::label() const {
  return "(" + std::to_string(static_cast<int>(constraint)) + ") " + constraint_name(constraint);
}

std::vector<Violation> check_feasibility(const ProjectInstance& instance, const ScheduleSolution& sol) {
  const int n = instance.activity_count();
  const int s = instance.skill_count();
  const int r = instance.resource_count();
  const auto& X = sol.assignment;
  if (X.activities() != n || X.skills() != s || X.resources() != r || sol.sequencing.rows() != n ||
      sol.sequencing.cols() != n || sol.usage.rows() != n || sol.usage.cols() != r ||
      static_cast<int>(sol.arrival_rates.size()) != r || static_cast<int>(sol.waits.size()) != r ||
      static_cast<int>(sol.activity_waits.size()) != n || static_cast<int>(sol.starts.size()) != n) {
    throw std::invalid_argument("solution dimensions do not match the instance");
  }

  std::vector<Violation> out;
  auto report = [&](Constraint c, std::vector<int> idx, double residual, const std::string& what) {
    out.push_back({c, idx, residual, what + " at (" + id_list(idx) + ")"});
  };

  for (int i = 0; i < n; ++i)
    for (int l = 0; l < s; ++l) {
      int assigned = 0;
      for (int k = 0; k < r; ++k) assigned += X(i, l, k) ? 1 : 0;
      const int required = instance.requirement(i, l);
      if (assigned != required)
        report(Constraint::SkillRequirement, {i, l}, std::abs(assigned - required),
               std::to_string(assigned) + " resources assigned, " + std::to_string(required) + " required");
    }

  for (int i = 0; i < n; ++i)
    for (int k = 0; k < r; ++k)
      if (const int skills = X.skills_on(i, k); skills > 1)
        report(Constraint::OneSkillPerResource, {i, k}, skills - 1, "resource performs several skills");

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (sol.sequencing(i, j) && sol.sequencing(j, i))
        report(Constraint::SequencingAntisymmetry, {i, j}, 1.0, "both Z_ij and Z_ji set");

  for (int k = 0; k < r; ++k)
    for (int i = 0; i < n; ++i) {
      const int load_i = X.skills_on(i, k);
      if (load_i == 0) continue;
      for (int j = i + 1; j < n; ++j) {
        const int lhs = load_i + X.skills_on(j, k);
        const int rhs = 1 + (sol.sequencing(i, j) ? 1 : 0) + (sol.sequencing(j, i) ? 1 : 0);
        if (lhs > rhs) report(Constraint::ResourceDisjunction, {i, j, k}, lhs - rhs, "unsequenced activities share a resource");
      }
    }

  std::vector<bool> stable(r, true);
  for (int k = 0; k < r; ++k) {
    int count = 0;
    for (int i = 0; i < n; ++i) count += X.skills_on(i, k);
    if (!close(sol.arrival_rates[k], count))
      report(Constraint::ArrivalRate, {k}, std::fabs(sol.arrival_rates[k] - count), "lambda differs from assignment count");
    const auto& params = instance.resource(k).reliability;
    const double critical = critical_arrival_rate(params);
    if (!(sol.arrival_rates[k] < critical)) {
      stable[k] = false;
      report(Constraint::WaitingTime, {k}, sol.arrival_rates[k] - critical, "arrival rate at or above critical rate");
      continue;
    }
    const double expected = waiting_time(sol.arrival_rates[k], params);
    if (!close(sol.waits[k], expected))
      report(Constraint::WaitingTime, {k}, std::fabs(sol.waits[k] - expected), "W differs from the queue formula");
  }

  for (int i = 0; i < n; ++i)
    for (int k = 0; k < r; ++k) {
      const bool used = X.skills_on(i, k) > 0;
      if (used && !sol.usage(i, k)) report(Constraint::WaitLinking, {i, k}, 1.0, "X set without Y");
      if (!used && sol.usage(i, k)) report(Constraint::WaitLinking, {i, k}, 1.0, "Y set without X");
      if (sol.usage(i, k) && !instance.is_dummy(i)) {
        const double gap = sol.waits[k] - sol.activity_waits[i];
        if (gap > kTolerance * (1.0 + std::fabs(sol.waits[k])))
          report(Constraint::WaitLinking, {i, k}, gap, "T_i below W_k of an allocated resource");
      }
    }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!instance.precedes(i, j) && !sol.sequencing(i, j)) continue;
      const double finish = sol.starts[i] + instance.duration(i) + sol.activity_waits[i];
      const double gap = finish - sol.starts[j];
      if (gap > kTolerance * (1.0 + std::fabs(sol.starts[j])))
        report(Constraint::Precedence, {i, j}, gap, "successor starts before finish plus wait");
    }

  for (int i = 0; i < n; ++i)
    for (int l = 0; l < s; ++l)
      for (int k = 0; k < r; ++k)
        if (X(i, l, k) && !instance.resource(k).masters(l))
          report(Constraint::SkillMastery, {i, l, k}, 1.0, "resource lacks the skill");

  auto non_negative = [](double v) { return std::isfinite(v) && v >= 0.0; };
  for (int k = 0; k < r; ++k) {
    if (!non_negative(sol.arrival_rates[k])) report(Constraint::Domain, {k}, -sol.arrival_rates[k], "lambda negative");
    if (!non_negative(sol.waits[k])) report(Constraint::Domain, {k}, -sol.waits[k], "W negative");
  }
  for (int i = 0; i < n; ++i) {
    if (!non_negative(sol.starts[i])) report(Constraint::Domain, {i}, -sol.starts[i], "S negative");
    if (!non_negative(sol.activity_waits[i])) report(Constraint::Domain, {i}, -sol.activity_waits[i], "T negative");
  }
  return out;
}

ObjectiveValues evaluate(const ProjectInstance& instance, const ScheduleSolution& sol) {
  ObjectiveValues v;
  const int n = instance.activity_count();
  if (n > 0) v.makespan = sol.starts[n - 1];
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < instance.skill_count(); ++l)
      for (int k = 0; k < instance.resource_count(); ++k)
        if (sol.assignment(i, l, k)) v.cost += instance.duration(i) * instance.resource(k).cost(l);
  return v;
}

ScheduleSolution tighten_starts(const ProjectInstance& instance, const AssignmentTensor& X, const BoolMatrix& Z) {
  const int n = instance.activity_count();
  const int r = instance.resource_count();
  if (X.activities() != n || X.skills() != instance.skill_count() || X.resources() != r || Z.rows() != n ||
      Z.cols() != n)
    throw std::invalid_argument("assignment or sequencing dimensions do not match the instance");

  ScheduleSolution sol = ScheduleSolution::empty_for(instance);
  sol.assignment = X;
  sol.sequencing = Z;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < r; ++k) {
      const int skills = X.skills_on(i, k);
      sol.arrival_rates[k] += skills;
      if (skills > 0) sol.usage.set(i, k);
    }
  for (int k = 0; k < r; ++k) {
    try {
      sol.waits[k] = waiting_time(sol.arrival_rates[k], instance.resource(k).reliability);
    } catch (const InstabilityError& e) {
      throw InstabilityError("resource " + std::to_string(k + 1) + ": " + e.what(), e.critical_rate(), k);
    }
  }
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < r; ++k)
      if (sol.usage(i, k)) sol.activity_waits[i] = std::max(sol.activity_waits[i], sol.waits[k]);

  std::vector<std::vector<int>> arcs(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (instance.precedes(i, j) || Z(i, j)) arcs[i].push_back(j);
  const auto order = topological_order(arcs);
  if (!order) throw CycleError("precedence and sequencing arcs contain a cycle");
  for (int i : *order) {
    const double release = sol.starts[i] + instance.duration(i) + sol.activity_waits[i];
    for (int j : arcs[i]) sol.starts[j] = std::max(sol.starts[j], release);
  }
  return sol;
}

std::vector<GanttRow> to_gantt(const ProjectInstance& instance, const ScheduleSolution& sol) {
  if (auto violations = check_feasibility(instance, sol); !violations.empty())
    throw ValidationError("cannot render an infeasible schedule: " + violations.front().label() + " " +
                          violations.front().message);
  std::vector<GanttRow> rows;
  for (int i = 1; i + 1 < instance.activity_count(); ++i) {
    GanttRow row;
    row.activity = i + 1;
    row.start = sol.starts[i];
    row.duration = instance.duration(i);
    row.wait = sol.activity_waits[i];
    for (int k = 0; k < instance.resource_count(); ++k)
      for (int l = 0; l < instance.skill_count(); ++l)
        if (sol.assignment(i, l, k)) row.resources.emplace_back(k + 1, l + 1);
    rows.push_back(std::move(row));
  }
  std::stable_sort(rows.begin(), rows.end(), [](const GanttRow& a, const GanttRow& b) {
    return a.start != b.start ? a.start < b.start : a.activity < b.activity;
  });
  return rows;
}

}  // namespace msrcpspr
