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

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "msrcpspr/errors.hpp"
#include "msrcpspr/instance.hpp"

namespace msrcpspr {

using json = nlohmann::json;

bool ResourceProfile::masters(int skill) const {
  return std::binary_search(skills.begin(), skills.end(), skill);
}

double ResourceProfile::cost(int skill) const {
  auto it = cost_per_skill.find(skill);
  return it == cost_per_skill.end() ? 0.0 : it->second;
}

ProjectInstance::ProjectInstance(std::string name, std::vector<Activity> activities,
                                 std::vector<std::vector<int>> successors,
                                 std::vector<ResourceProfile> resources, int skill_count)
    : name_(std::move(name)),
      activities_(std::move(activities)),
      successors_(std::move(successors)),
      resources_(std::move(resources)),
      skill_count_(skill_count) {
  const std::size_t n = activities_.size();
  successors_.resize(n);
  precedence_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (int j : successors_[i])
      if (j >= 0 && static_cast<std::size_t>(j) < n) precedence_[i * n + j] = 1;
  for (auto& resource : resources_) std::sort(resource.skills.begin(), resource.skills.end());
}

int ProjectInstance::requirement(int activity, int skill) const {
  const auto& req = activities_[activity].skill_requirements;
  auto it = req.find(skill);
  return it == req.end() ? 0 : it->second;
}

ProjectInstance ProjectInstance::with_scaled_rate(Rate rate, double factor) const {
  ProjectInstance copy = *this;
  for (auto& resource : copy.resources_) {
    auto& params = resource.reliability;
    switch (rate) {
      case Rate::Disruption: params.disruption_rate *= factor; break;
      case Rate::Retrieval: params.retrieval_rate *= factor; break;
      case Rate::Service: params.service_rate *= factor; break;
    }
  }
  return copy;
}

std::vector<std::string> validate(const ProjectInstance& instance) {
  std::vector<std::string> out;
  const int n = instance.activity_count();
  const int skills = instance.skill_count();
  auto name = [](const char* kind, int index) { return std::string(kind) + " " + std::to_string(index + 1); };

  if (n < 2) out.push_back("project needs a dummy source and sink");
  if (skills < 0) out.push_back("skill_count must be >= 0");

  for (int i = 0; i < n; ++i) {
    const Activity& a = instance.activity(i);
    if (a.id != i + 1) out.push_back(name("activity", i) + ": id must be " + std::to_string(i + 1));
    if (a.duration < 0) out.push_back(name("activity", i) + ": negative duration");
    if (instance.is_dummy(i) && (a.duration != 0 || !a.skill_requirements.empty()))
      out.push_back(name("activity", i) + ": dummy activity must have zero duration and no requirements");
    int total = 0;
    for (auto [skill, count] : a.skill_requirements) {
      if (skill < 0 || skill >= skills) out.push_back(name("activity", i) + ": unknown skill " + std::to_string(skill + 1));
      if (count < 0) out.push_back(name("activity", i) + ": negative requirement");
      total += count;
    }
    if (total > instance.resource_count())
      out.push_back(name("activity", i) + ": requires more resources than exist");
  }

  for (int k = 0; k < instance.resource_count(); ++k) {
    const ResourceProfile& res = instance.resource(k);
    if (res.id != k + 1) out.push_back(name("resource", k) + ": id must be " + std::to_string(k + 1));
    if (res.skills.empty()) out.push_back(name("resource", k) + ": must master at least one skill");
    for (int skill : res.skills)
      if (skill < 0 || skill >= skills) out.push_back(name("resource", k) + ": unknown skill " + std::to_string(skill + 1));
    for (auto [skill, cost] : res.cost_per_skill) {
      if (!res.masters(skill))
        out.push_back(name("resource", k) + ": cost given for unmastered skill " + std::to_string(skill + 1));
      if (!std::isfinite(cost) || cost < 0) out.push_back(name("resource", k) + ": cost must be finite and >= 0");
    }
    const auto rate_ok = [](double v) { return std::isfinite(v) && v > 0; };
    if (!rate_ok(res.reliability.disruption_rate)) out.push_back(name("resource", k) + ": disruption_rate must be > 0");
    if (!rate_ok(res.reliability.retrieval_rate)) out.push_back(name("resource", k) + ": retrieval_rate must be > 0");
    if (!rate_ok(res.reliability.service_rate)) out.push_back(name("resource", k) + ": service_rate must be > 0");
  }

  bool indices_ok = true;
  for (int i = 0; i < n; ++i)
    for (int j : instance.successors(i)) {
      if (j < 0 || j >= n) {
        out.push_back(name("activity", i) + ": successor out of range");
        indices_ok = false;
      } else if (j == i) {
        out.push_back(name("activity", i) + ": precedes itself");
      } else if (j < i) {
        out.push_back(name("activity", i) + ": activities not topologically ordered (successor " +
                      std::to_string(j + 1) + ")");
      }
    }
  if (indices_ok && !topological_order(instance.successor_lists())) out.push_back("precedence not a DAG");
  if (n >= 2) {
    for (int i = 0; i < n; ++i)
      if (indices_ok && instance.precedes(i, 0)) out.push_back("source activity has a predecessor");
    if (!instance.successors(n - 1).empty()) out.push_back("sink activity has successors");
  }
  return out;
}

namespace {

// Kuhn's augmenting paths: can every demanded unit get a distinct master?
bool demands_matchable(const ProjectInstance& instance, int activity) {
  std::vector<int> unit_skill;
  for (auto [skill, count] : instance.activity(activity).skill_requirements)
    for (int c = 0; c < count; ++c) unit_skill.push_back(skill);
  std::vector<int> owner(instance.resource_count(), -1);
  std::function<bool(int, std::vector<char>&)> augment = [&](int unit, std::vector<char>& seen) {
    for (int k = 0; k < instance.resource_count(); ++k) {
      if (seen[k] || !instance.resource(k).masters(unit_skill[unit])) continue;
      seen[k] = 1;
      if (owner[k] < 0 || augment(owner[k], seen)) {
        owner[k] = unit;
        return true;
      }
    }
    return false;
  };
  for (int u = 0; u < static_cast<int>(unit_skill.size()); ++u) {
    std::vector<char> seen(instance.resource_count(), 0);
    if (!augment(u, seen)) return false;
  }
  return true;
}

}  // namespace

std::vector<std::string> feasibility_warnings(const ProjectInstance& instance) {
  std::vector<std::string> out;
  for (int i = 0; i < instance.activity_count(); ++i) {
    bool per_skill_ok = true;
    for (auto [skill, count] : instance.activity(i).skill_requirements) {
      if (count == 0) continue;
      int masters = 0;
      for (const auto& res : instance.resources()) masters += res.masters(skill) ? 1 : 0;
      if (masters == 0) {
        out.push_back("activity " + std::to_string(i + 1) + ": skill " + std::to_string(skill + 1) +
                      " is mastered by no resource");
        per_skill_ok = false;
      } else if (masters < count) {
        out.push_back("activity " + std::to_string(i + 1) + ": needs " + std::to_string(count) +
                      " resources with skill " + std::to_string(skill + 1) + " but only " +
                      std::to_string(masters) + " master it");
        per_skill_ok = false;
      }
    }
    if (per_skill_ok && !demands_matchable(instance, i))
      out.push_back("activity " + std::to_string(i + 1) + ": skill demands cannot be met by distinct resources");
  }
  return out;
}

namespace {

void reject_unknown_keys(const json& object, std::initializer_list<const char*> allowed, const std::string& where) {
  for (const auto& [key, value] : object.items()) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }))
      throw ParseError("unknown key '" + key + "' in " + where, 0);
  }
}

const json& require(const json& object, const char* key, const std::string& where) {
  auto it = object.find(key);
  if (it == object.end()) throw ParseError("missing '" + std::string(key) + "' in " + where, 0);
  return *it;
}

int as_int(const json& value, const std::string& what) {
  if (!value.is_number_integer()) throw ParseError(what + " must be an integer", 0);
  return value.get<int>();
}

double as_number(const json& value, const std::string& what) {
  if (!value.is_number()) throw ParseError(what + " must be a number", 0);
  return value.get<double>();
}

}  // namespace

LoadedInstance load_extension(const PsplibProject& project, std::string_view sidecar_json) {
  json doc;
  try {
    doc = json::parse(sidecar_json.begin(), sidecar_json.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("extension: ") + e.what(), 0);
  }
  if (!doc.is_object()) throw ParseError("extension must be a JSON object", 0);
  reject_unknown_keys(doc, {"skill_count", "resources", "requirements"}, "extension");

  const int skill_count = as_int(require(doc, "skill_count", "extension"), "skill_count");
  if (skill_count < 1) throw ParseError("skill_count must be >= 1", 0);
  const auto skill_index = [&](const json& value, const std::string& where) {
    const int id = as_int(value, where);
    if (id < 1 || id > skill_count) throw ParseError(where + ": skill " + std::to_string(id) + " out of range", 0);
    return id - 1;
  };

  const json& resources_doc = require(doc, "resources", "extension");
  if (!resources_doc.is_array()) throw ParseError("resources must be an array", 0);
  std::vector<ResourceProfile> resources;
  for (const json& entry : resources_doc) {
    if (!entry.is_object()) throw ParseError("resource entries must be objects", 0);
    const std::string where = "resource " + (entry.contains("id") ? entry["id"].dump() : std::string("?"));
    reject_unknown_keys(entry,
                        {"id", "skills", "cost_per_skill", "disruption_rate", "retrieval_rate", "service_rate"},
                        where);
    ResourceProfile res;
    res.id = as_int(require(entry, "id", where), where + " id");
    const json& skills = require(entry, "skills", where);
    if (!skills.is_array()) throw ParseError(where + ": skills must be an array", 0);
    for (const json& s : skills) res.skills.push_back(skill_index(s, where));
    std::sort(res.skills.begin(), res.skills.end());
    if (std::adjacent_find(res.skills.begin(), res.skills.end()) != res.skills.end())
      throw ParseError(where + ": duplicate skill", 0);
    const json& costs = require(entry, "cost_per_skill", where);
    if (!costs.is_object()) throw ParseError(where + ": cost_per_skill must be an object", 0);
    for (const auto& [key, value] : costs.items()) {
      int id = 0;
      try {
        std::size_t used = 0;
        id = std::stoi(key, &used);
        if (used != key.size()) id = 0;
      } catch (const std::exception&) {
        id = 0;
      }
      if (id < 1 || id > skill_count) throw ParseError(where + ": bad cost_per_skill key '" + key + "'", 0);
      res.cost_per_skill[id - 1] = as_number(value, where + " cost");
    }
    for (int skill : res.skills)
      if (!res.cost_per_skill.count(skill))
        throw ParseError(where + ": missing cost for skill " + std::to_string(skill + 1), 0);
    res.reliability.disruption_rate = as_number(require(entry, "disruption_rate", where), where + " disruption_rate");
    res.reliability.retrieval_rate = as_number(require(entry, "retrieval_rate", where), where + " retrieval_rate");
    res.reliability.service_rate = as_number(require(entry, "service_rate", where), where + " service_rate");
    resources.push_back(std::move(res));
  }
  std::sort(resources.begin(), resources.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  for (std::size_t k = 0; k < resources.size(); ++k)
    if (resources[k].id != static_cast<int>(k) + 1)
      throw ParseError("resource ids must be 1.." + std::to_string(resources.size()), 0);

  const int n = project.job_count();
  std::vector<Activity> activities(n);
  for (int i = 0; i < n; ++i) {
    activities[i].id = i + 1;
    activities[i].duration = project.durations[i];
  }
  const json& requirements = require(doc, "requirements", "extension");
  if (!requirements.is_array()) throw ParseError("requirements must be an array", 0);
  for (const json& entry : requirements) {
    if (!entry.is_object()) throw ParseError("requirement entries must be objects", 0);
    reject_unknown_keys(entry, {"activity", "skill", "count"}, "requirement");
    const int activity = as_int(require(entry, "activity", "requirement"), "requirement activity");
    if (activity < 2 || activity > n - 1)
      throw ParseError("requirement activity " + std::to_string(activity) + " is not an executable activity", 0);
    const int skill = skill_index(require(entry, "skill", "requirement"), "requirement");
    const int count = as_int(require(entry, "count", "requirement"), "requirement count");
    if (count < 0) throw ParseError("requirement count must be >= 0", 0);
    auto& req = activities[activity - 1].skill_requirements;
    if (req.count(skill))
      throw ParseError("duplicate requirement for activity " + std::to_string(activity), 0);
    if (count > 0) req[skill] = count;
  }

  LoadedInstance loaded{ProjectInstance(project.name, std::move(activities), project.successors,
                                        std::move(resources), skill_count),
                        {}};
  if (auto violations = validate(loaded.instance); !violations.empty()) {
    std::string message = "invalid instance:";
    for (const auto& v : violations) message += "\n  " + v;
    throw ValidationError(message);
  }
  loaded.warnings = feasibility_warnings(loaded.instance);
  return loaded;
}

std::string default_extension(const PsplibProject& project, const AdaptationOptions& options) {
  const int n = project.job_count();
  const int skills = options.skill_count;
  const int units = options.resource_count;
  if (skills < 1 || units < 1) throw std::invalid_argument("adaptation needs >= 1 skill and resource");
  const double service_rate =
      options.service_rate > 0 ? options.service_rate : 3.0 * std::max(1, n - 2);

  std::mt19937 rng(options.cost_seed);
  json resources = json::array();
  for (int k = 1; k <= units; ++k) {
    const int primary = (k * skills + units - 1) / units;  // ceil(k|S|/|R|)
    std::set<int> mastered{primary};
    if (skills > 1) mastered.insert(primary % skills + 1);
    json costs = json::object();
    for (int skill : mastered) costs[std::to_string(skill)] = 1000 * (5 + static_cast<int>(rng() % 11));
    resources.push_back({{"id", k},
                         {"skills", std::vector<int>(mastered.begin(), mastered.end())},
                         {"cost_per_skill", costs},
                         {"disruption_rate", options.disruption_rate},
                         {"retrieval_rate", options.retrieval_rate},
                         {"service_rate", service_rate}});
  }

  json requirements = json::array();
  for (int i = 1; i + 1 < n; ++i) {
    const auto& request = project.requests[i];
    std::map<int, int> per_skill;
    int types_used = 0;
    for (std::size_t t = 0; t < request.size(); ++t) {
      if (request[t] <= 0) continue;
      ++types_used;
      per_skill[static_cast<int>(t) % skills + 1] += request[t];
    }
    const int cap = types_used == 1 ? options.request_cap : 1;
    for (auto [skill, amount] : per_skill)
      requirements.push_back({{"activity", i + 1}, {"skill", skill}, {"count", std::min(amount, cap)}});
  }

  json doc = {{"skill_count", skills}, {"resources", resources}, {"requirements", requirements}};
  return doc.dump(2) + "\n";
}

}  // namespace msrcpspr
