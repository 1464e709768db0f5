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

// Shared fixtures and generators for the test binaries.
#ifndef MSRCPSPR_TESTS_SUPPORT_HPP_
#define MSRCPSPR_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "msrcpspr/instance.hpp"
#include "msrcpspr/queueing.hpp"
#include "msrcpspr/schedule.hpp"

namespace msrcpspr::testing {

inline std::string data_path(const std::string& name) { return std::string(MSRCPSPR_DATA_DIR) + "/" + name; }

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline ProjectInstance load_pair(const std::string& sm, const std::string& json) {
  return load_extension(parse_psplib_file(data_path(sm)), slurp(data_path(json))).instance;
}

inline ProjectInstance toy5() { return load_pair("toy5.sm", "toy5.json"); }

inline ProjectInstance j10() {
  const auto project = parse_psplib_file(data_path("j10.sm"));
  return load_extension(project, default_extension(project)).instance;
}

inline ReliabilityParams reliability(double upsilon, double r, double mu) {
  ReliabilityParams p;
  p.disruption_rate = upsilon;
  p.retrieval_rate = r;
  p.service_rate = mu;
  return p;
}

inline ResourceProfile resource(int id, std::map<int, double> costs, ReliabilityParams params) {
  ResourceProfile res;
  res.id = id;
  for (auto [skill, cost] : costs) res.skills.push_back(skill);
  res.cost_per_skill = std::move(costs);
  res.reliability = params;
  return res;
}

/// Executable activities get ids 2..n-1. `edges` are 1-based (from, to)
/// among executable activities; source and sink links are added for
/// activities without predecessors or successors.
inline ProjectInstance make_instance(const std::vector<int>& durations,
                                     const std::vector<std::pair<int, int>>& edges,
                                     std::vector<ResourceProfile> resources,
                                     const std::vector<std::map<int, int>>& requirements, int skills) {
  const int n = static_cast<int>(durations.size()) + 2;
  std::vector<Activity> acts(n);
  for (int i = 0; i < n; ++i) acts[i].id = i + 1;
  for (int i = 1; i + 1 < n; ++i) {
    acts[i].duration = durations[i - 1];
    if (i - 1 < static_cast<int>(requirements.size())) acts[i].skill_requirements = requirements[i - 1];
  }
  std::vector<std::vector<int>> succ(n);
  std::vector<int> indeg(n, 0);
  for (auto [a, b] : edges) {
    succ[a - 1].push_back(b - 1);
    ++indeg[b - 1];
  }
  for (int i = 1; i + 1 < n; ++i) {
    if (indeg[i] == 0) succ[0].push_back(i);
    if (succ[i].empty()) succ[i].push_back(n - 1);
  }
  if (n == 2) succ[0].push_back(1);
  for (auto& s : succ) std::sort(s.begin(), s.end());
  return ProjectInstance("generated", std::move(acts), std::move(succ), std::move(resources), skills);
}

struct GeneratorLimits {
  int max_activities = 5;
  int max_resources = 4;
  int max_skills = 3;
  double service_floor = 3.0;  // mu drawn from [floor, floor + 6]
};

/// Random instance where every demand can be met by distinct masters.
inline ProjectInstance random_instance(std::mt19937_64& rng, const GeneratorLimits& lim = {}) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto real = [&](double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); };
  const int acts = pick(1, lim.max_activities);
  const int res_count = pick(1, lim.max_resources);
  const int skills = pick(1, lim.max_skills);

  std::vector<ResourceProfile> resources;
  std::vector<int> masters(skills, 0);
  for (int k = 0; k < res_count; ++k) {
    std::map<int, double> costs;
    for (int l = 0; l < skills; ++l)
      if (pick(0, 1) == 1) costs[l] = 10.0 * pick(1, 20);
    if (costs.empty()) costs[pick(0, skills - 1)] = 10.0 * pick(1, 20);
    for (auto [l, c] : costs) ++masters[l];
    resources.push_back(resource(k + 1, costs,
                                 reliability(real(0.1, 1.0), real(0.3, 1.5), real(lim.service_floor, lim.service_floor + 6))));
  }
  std::vector<int> durations;
  std::vector<std::map<int, int>> reqs;
  for (int a = 0; a < acts; ++a) {
    durations.push_back(pick(1, 6));
    std::map<int, int> req;
    std::vector<int> avail;
    for (int l = 0; l < skills; ++l)
      if (masters[l] > 0) avail.push_back(l);
    const int l = avail[pick(0, static_cast<int>(avail.size()) - 1)];
    req[l] = std::min(masters[l], pick(1, 2));
    if (pick(0, 2) == 0 && avail.size() > 1) {
      // A second skill only when enough distinct resources remain.
      const int l2 = avail[pick(0, static_cast<int>(avail.size()) - 1)];
      if (l2 != l && req[l] + 1 <= res_count) req[l2] = 1;
    }
    reqs.push_back(req);
  }
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < acts; ++a)
    for (int b = a + 1; b < acts; ++b)
      if (pick(0, 2) == 0) edges.emplace_back(a + 2, b + 2);
  return make_instance(durations, edges, std::move(resources), reqs, skills);
}

/// A random (X, Z) pair satisfying the assignment and sequencing relations,
/// or false when the drawn X has no distinct-master assignment.
inline bool random_completion(const ProjectInstance& inst, std::mt19937_64& rng, AssignmentTensor& X, BoolMatrix& Z) {
  const int n = inst.activity_count();
  const int r = inst.resource_count();
  X = AssignmentTensor(inst);
  Z = BoolMatrix(n, n);
  for (int i = 1; i + 1 < n; ++i) {
    std::vector<char> used(r, 0);
    for (auto [skill, count] : inst.activity(i).skill_requirements) {
      std::vector<int> pool;
      for (int k = 0; k < r; ++k)
        if (!used[k] && inst.resource(k).masters(skill)) pool.push_back(k);
      if (static_cast<int>(pool.size()) < count) return false;
      std::shuffle(pool.begin(), pool.end(), rng);
      for (int c = 0; c < count; ++c) {
        X.set(i, skill, pool[c]);
        used[pool[c]] = 1;
      }
    }
  }
  // Random linear extension of the precedence order orients every conflict.
  std::vector<int> indeg(n, 0), order;
  for (int i = 0; i < n; ++i)
    for (int j : inst.successors(i)) ++indeg[j];
  std::vector<int> ready{0};
  while (!ready.empty()) {
    const int at = std::uniform_int_distribution<int>(0, static_cast<int>(ready.size()) - 1)(rng);
    const int i = ready[at];
    ready.erase(ready.begin() + at);
    order.push_back(i);
    for (int j : inst.successors(i))
      if (--indeg[j] == 0) ready.push_back(j);
  }
  std::vector<int> pos(n);
  for (int p = 0; p < n; ++p) pos[order[p]] = p;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      bool shared = false;
      for (int k = 0; k < r && !shared; ++k) shared = X.skills_on(i, k) > 0 && X.skills_on(j, k) > 0;
      if (!shared) continue;
      if (pos[i] < pos[j]) Z.set(i, j);
      else Z.set(j, i);
    }
  return true;
}

/// True when every resource load stays below its critical rate.
inline bool stable_load(const ProjectInstance& inst, const AssignmentTensor& X) {
  for (int k = 0; k < inst.resource_count(); ++k) {
    int load = 0;
    for (int i = 0; i < inst.activity_count(); ++i) load += X.skills_on(i, k);
    if (load >= critical_arrival_rate(inst.resource(k).reliability)) return false;
  }
  return true;
}

}  // namespace msrcpspr::testing

#endif  // MSRCPSPR_TESTS_SUPPORT_HPP_
