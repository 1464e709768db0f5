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

#ifndef MSRCPSPR_SCHEDULE_HPP_
#define MSRCPSPR_SCHEDULE_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "msrcpspr/instance.hpp"

namespace msrcpspr {

/// Dense 0/1 matrix.
class BoolMatrix {
 public:
  BoolMatrix() = default;
  BoolMatrix(int rows, int cols) : rows_(rows), cols_(cols), bits_(static_cast<std::size_t>(rows) * cols, 0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool operator()(int r, int c) const { return bits_[index(r, c)] != 0; }
  void set(int r, int c, bool value = true) { bits_[index(r, c)] = value ? 1 : 0; }
  friend bool operator==(const BoolMatrix&, const BoolMatrix&) = default;

 private:
  std::size_t index(int r, int c) const { return static_cast<std::size_t>(r) * cols_ + c; }
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::uint8_t> bits_;
};

/// X[i][l][k]: activity i uses resource k for skill l.
class AssignmentTensor {
 public:
  AssignmentTensor() = default;
  AssignmentTensor(int activities, int skills, int resources)
      : n_(activities), s_(skills), r_(resources), bits_(static_cast<std::size_t>(activities) * skills * resources, 0) {}
  explicit AssignmentTensor(const ProjectInstance& instance)
      : AssignmentTensor(instance.activity_count(), instance.skill_count(), instance.resource_count()) {}

  int activities() const { return n_; }
  int skills() const { return s_; }
  int resources() const { return r_; }
  bool operator()(int i, int l, int k) const { return bits_[index(i, l, k)] != 0; }
  void set(int i, int l, int k, bool value = true) { bits_[index(i, l, k)] = value ? 1 : 0; }
  /// Number of skills resource k performs on activity i.
  int skills_on(int i, int k) const;
  friend bool operator==(const AssignmentTensor&, const AssignmentTensor&) = default;

 private:
  std::size_t index(int i, int l, int k) const {
    return (static_cast<std::size_t>(i) * s_ + l) * r_ + k;
  }
  int n_ = 0, s_ = 0, r_ = 0;
  std::vector<std::uint8_t> bits_;
};

/// The full decision vector of the scheduling model.
struct ScheduleSolution {
  AssignmentTensor assignment;         // X
  BoolMatrix sequencing;               // Z, activity x activity
  BoolMatrix usage;                    // Y, activity x resource
  std::vector<double> arrival_rates;   // lambda per resource
  std::vector<double> waits;           // W per resource
  std::vector<double> activity_waits;  // T per activity
  std::vector<double> starts;          // S per activity

  /// Zero-valued solution shaped for `instance`.
  static ScheduleSolution empty_for(const ProjectInstance& instance);
};

struct ObjectiveValues {
  double makespan = 0.0;
  double cost = 0.0;
  friend bool operator==(const ObjectiveValues&, const ObjectiveValues&) = default;
};

/// Model constraints, numbered as in the formulation.
enum class Constraint : int {
  SkillRequirement = 3,
  OneSkillPerResource = 4,
  SequencingAntisymmetry = 5,
  ResourceDisjunction = 6,
  ArrivalRate = 7,
  WaitingTime = 8,
  WaitLinking = 9,
  Precedence = 10,
  SkillMastery = 11,
  Domain = 12,
};

const char* constraint_name(Constraint c);

struct Violation {
  Constraint constraint;
  std::vector<int> indices;  // 0-based, meaning depends on the constraint
  double residual = 0.0;     // amount by which the relation is violated
  std::string message;

  std::string label() const;  // "(6) resource_disjunction"
};

/// Every relation (3)..(12) is checked; the result is empty iff `solution`
/// is feasible. Throws std::invalid_argument on dimension mismatch.
std::vector<Violation> check_feasibility(const ProjectInstance& instance, const ScheduleSolution& solution);

/// makespan = S at the sink, cost = sum d_i * c_lk * X_ilk.
ObjectiveValues evaluate(const ProjectInstance& instance, const ScheduleSolution& solution);

/// Completes (X, Z) with lambda, W, tight T and earliest starts over the
/// union of precedence and sequencing arcs (arc weight d_i + T_i). Throws
/// InstabilityError when a resource is overloaded and CycleError when the
/// arcs contain a cycle.
ScheduleSolution tighten_starts(const ProjectInstance& instance, const AssignmentTensor& assignment,
                                const BoolMatrix& sequencing);

struct GanttRow {
  int activity = 0;  // 1-based id
  double start = 0.0;
  int duration = 0;
  double wait = 0.0;  // rendered after processing, before successors may start
  std::vector<std::pair<int, int>> resources;  // (resource id, skill id), 1-based

  double finish() const { return start + duration + wait; }
};

/// Executable activities sorted by start (then id). Throws ValidationError
/// for infeasible solutions.
std::vector<GanttRow> to_gantt(const ProjectInstance& instance, const ScheduleSolution& solution);

}  // namespace msrcpspr

#endif  // MSRCPSPR_SCHEDULE_HPP_
