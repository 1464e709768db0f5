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

#ifndef MSRCPSPR_INSTANCE_HPP_
#define MSRCPSPR_INSTANCE_HPP_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace msrcpspr {

// Indices are 0-based throughout the library. Activity, resource and skill
// ids written to files are 1-based (index + 1).

struct ReliabilityParams {
  double disruption_rate = 0.0;  // breakdowns per time unit
  double retrieval_rate = 0.0;   // repairs per time unit
  double service_rate = 0.0;     // services per time unit
};

struct Activity {
  int id = 0;
  int duration = 0;
  /// skill index -> number of distinct resources required with that skill
  std::map<int, int> skill_requirements;
};

struct ResourceProfile {
  int id = 0;
  std::vector<int> skills;  // sorted skill indices
  std::map<int, double> cost_per_skill;
  ReliabilityParams reliability;

  bool masters(int skill) const;
  /// Cost per time unit of using this resource with `skill`; 0 if unmastered.
  double cost(int skill) const;
};

/// Immutable project description: AON network with dummy source and sink,
/// skill demands, and the multi-skilled resource pool.
class ProjectInstance {
 public:
  ProjectInstance() = default;
  ProjectInstance(std::string name, std::vector<Activity> activities,
                  std::vector<std::vector<int>> successors,
                  std::vector<ResourceProfile> resources, int skill_count);

  const std::string& name() const { return name_; }
  int activity_count() const { return static_cast<int>(activities_.size()); }
  int resource_count() const { return static_cast<int>(resources_.size()); }
  int skill_count() const { return skill_count_; }

  const std::vector<Activity>& activities() const { return activities_; }
  const Activity& activity(int i) const { return activities_[i]; }
  const std::vector<ResourceProfile>& resources() const { return resources_; }
  const ResourceProfile& resource(int k) const { return resources_[k]; }
  const std::vector<int>& successors(int i) const { return successors_[i]; }
  const std::vector<std::vector<int>>& successor_lists() const { return successors_; }

  /// Direct precedence p_ij.
  bool precedes(int i, int j) const {
    return precedence_[static_cast<std::size_t>(i) * activities_.size() + j] != 0;
  }
  int requirement(int activity, int skill) const;
  int duration(int i) const { return activities_[i].duration; }
  bool is_dummy(int i) const { return i == 0 || i + 1 == activity_count(); }

  /// Copy with one family of reliability rates multiplied by `factor`.
  enum class Rate { Disruption, Retrieval, Service };
  ProjectInstance with_scaled_rate(Rate rate, double factor) const;

 private:
  std::string name_;
  std::vector<Activity> activities_;
  std::vector<std::vector<int>> successors_;
  std::vector<ResourceProfile> resources_;
  int skill_count_ = 0;
  std::vector<std::uint8_t> precedence_;
};

/// The part of a project that a single-mode PSPLIB file carries.
struct PsplibProject {
  std::string name;
  int horizon = 0;
  std::vector<int> durations;
  std::vector<std::vector<int>> successors;  // 0-based
  std::vector<std::vector<int>> requests;    // [activity][renewable type]
  std::vector<int> capacities;               // per renewable type

  int job_count() const { return static_cast<int>(durations.size()); }
  friend bool operator==(const PsplibProject&, const PsplibProject&) = default;
};

PsplibProject parse_psplib(std::istream& in);
PsplibProject parse_psplib_text(std::string_view text);
PsplibProject parse_psplib_file(const std::string& path);
std::string write_psplib(const PsplibProject& project);

/// Kahn peel with the lowest ready index first; nullopt on a cycle.
std::optional<std::vector<int>> topological_order(const std::vector<std::vector<int>>& successors);

struct LoadedInstance {
  ProjectInstance instance;
  std::vector<std::string> warnings;
};

/// Combine PSPLIB network data with a JSON extension sidecar (skills,
/// resources, reliability rates, skill requirements). Throws ParseError on
/// schema problems and ValidationError when the result violates an invariant.
LoadedInstance load_extension(const PsplibProject& project, std::string_view sidecar_json);

struct AdaptationOptions {
  int resource_count = 4;
  int skill_count = 4;
  int request_cap = 2;
  double disruption_rate = 0.5;
  double retrieval_rate = 0.5;
  /// Non-positive selects 3 * (number of executable activities).
  double service_rate = 0.0;
  std::uint32_t cost_seed = 2024;
};

/// Deterministic sidecar for a PSPLIB project: resource k masters skill
/// ceil(k|S|/|R|) and its cyclic neighbour, requests map renewable type t to
/// skill t, and costs come from a seeded table.
std::string default_extension(const PsplibProject& project, const AdaptationOptions& options = {});

/// Empty iff every instance invariant holds.
std::vector<std::string> validate(const ProjectInstance& instance);

/// Demands that no assignment can meet (unmastered skills, too few masters).
std::vector<std::string> feasibility_warnings(const ProjectInstance& instance);

}  // namespace msrcpspr

#endif  // MSRCPSPR_INSTANCE_HPP_
