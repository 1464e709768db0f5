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

#include "msrcpspr/msrcpspr.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>

#include "msrcpspr/errors.hpp"
#include "msrcpspr/pareto.hpp"
#include "msrcpspr/queueing.hpp"
#include "msrcpspr/report.hpp"
#include "msrcpspr/sensitivity.hpp"
#include "msrcpspr/solver.hpp"
#include "msrcpspr/vikor.hpp"

using namespace msrcpspr;

struct msr_instance {
  std::shared_ptr<const ProjectInstance> instance;
  std::vector<std::string> warnings;
};

struct msr_solution {
  std::shared_ptr<const ProjectInstance> instance;
  SolveStatus status = SolveStatus::Infeasible;
  std::optional<ScheduleSolution> schedule;
  ObjectiveValues values;
  double slack = 0.0;
  std::uint64_t nodes = 0;
  double wall_time = 0.0;
};

struct msr_front {
  std::shared_ptr<const ProjectInstance> instance;
  ParetoFront front;
};

struct msr_ranking {
  VikorRanking ranking;
};

struct msr_sweep {
  SweepReport report;
};

namespace {

thread_local std::string last_error;

msr_status fail(msr_status code, const std::string& message) {
  last_error = message;
  return code;
}

// Runs `body`, translating exceptions into status codes.
template <typename Body>
msr_status guarded(Body body) {
  try {
    return body();
  } catch (const ParseError& e) {
    return fail(MSR_ERR_PARSE, e.what());
  } catch (const CycleError& e) {
    return fail(MSR_ERR_VALIDATION, e.what());
  } catch (const ValidationError& e) {
    return fail(MSR_ERR_VALIDATION, e.what());
  } catch (const InstabilityError& e) {
    return fail(MSR_ERR_INSTABILITY, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(MSR_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(MSR_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(MSR_ERR_INTERNAL, "unknown error");
  }
}

char* duplicate(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

msr_status put(char** out, const std::string& text) {
  if (!out) return fail(MSR_ERR_INVALID_ARGUMENT, "null output pointer");
  *out = duplicate(text);
  return MSR_OK;
}

std::string join_lines(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) out += l + '\n';
  return out;
}

bool read_file(const char* path, std::string& text) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream s;
  s << in.rdbuf();
  text = s.str();
  return true;
}

AdaptationOptions adaptation_from(const msr_adaptation* o) {
  AdaptationOptions a;
  if (!o) return a;
  a.resource_count = o->resource_count;
  a.skill_count = o->skill_count;
  a.request_cap = o->request_cap;
  a.disruption_rate = o->disruption_rate;
  a.retrieval_rate = o->retrieval_rate;
  a.service_rate = o->service_rate;
  a.cost_seed = o->cost_seed;
  return a;
}

msr_instance* wrap(LoadedInstance loaded) {
  auto* out = new msr_instance;
  out->instance = std::make_shared<const ProjectInstance>(std::move(loaded.instance));
  out->warnings = std::move(loaded.warnings);
  return out;
}

ReliabilityParams params_of(const msr_queue_point& p) {
  ReliabilityParams params;
  params.disruption_rate = p.upsilon;
  params.retrieval_rate = p.r;
  params.service_rate = p.mu;
  return params;
}

SolveLimits limits_from(double time_limit, std::uint64_t node_limit) {
  SolveLimits limits;
  limits.time_seconds = time_limit;
  limits.node_limit = node_limit;
  return limits;
}

FrontOptions front_options_from(const msr_front_options* o) {
  FrontOptions f;
  if (!o) return f;
  f.grid_count = o->grid_count;
  f.eps = o->eps;
  f.augmented = o->augmented != 0;
  f.bypass = o->bypass != 0;
  f.threads = o->threads;
  f.limits = limits_from(o->time_limit, o->node_limit);
  return f;
}

msr_solve_status c_status(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal: return MSR_OPTIMAL;
    case SolveStatus::Infeasible: return MSR_INFEASIBLE;
    case SolveStatus::Timeout: return MSR_TIMEOUT;
  }
  return MSR_INFEASIBLE;
}

const ScheduleSolution* front_schedule(const msr_front* front, std::size_t index) {
  if (!front || index >= front->front.points.size()) throw std::invalid_argument("front point index out of range");
  const auto& sol = front->front.points[index].solution;
  if (!sol) throw std::invalid_argument("front point carries no schedule");
  return sol.get();
}

}  // namespace

extern "C" {

const char* msr_version(void) { return "1.0.0"; }
const char* msr_last_error(void) { return last_error.c_str(); }
void msr_string_free(char* text) { std::free(text); }

void msr_adaptation_init(msr_adaptation* o) {
  if (!o) return;
  const AdaptationOptions a;
  o->resource_count = a.resource_count;
  o->skill_count = a.skill_count;
  o->request_cap = a.request_cap;
  o->disruption_rate = a.disruption_rate;
  o->retrieval_rate = a.retrieval_rate;
  o->service_rate = a.service_rate;
  o->cost_seed = a.cost_seed;
}

msr_status msr_instance_load(const char* psplib_path, const char* extension_path, msr_instance** out) {
  return guarded([&] {
    if (!psplib_path || !out) return fail(MSR_ERR_INVALID_ARGUMENT, "null argument");
    std::string sm, ext;
    if (!read_file(psplib_path, sm)) return fail(MSR_ERR_IO, std::string("cannot read ") + psplib_path);
    auto project = parse_psplib_text(sm);
    // The network is checked first so structural errors win over a missing sidecar.
    if (!extension_path) return fail(MSR_ERR_INVALID_ARGUMENT, "extension required");
    if (!read_file(extension_path, ext)) return fail(MSR_ERR_IO, std::string("cannot read ") + extension_path);
    if (project.name.empty()) project.name = psplib_path;
    *out = wrap(load_extension(project, ext));
    return MSR_OK;
  });
}

msr_status msr_instance_load_default(const char* psplib_path, const msr_adaptation* options, msr_instance** out) {
  return guarded([&] {
    if (!psplib_path || !out) return fail(MSR_ERR_INVALID_ARGUMENT, "null argument");
    std::string sm;
    if (!read_file(psplib_path, sm)) return fail(MSR_ERR_IO, std::string("cannot read ") + psplib_path);
    const auto project = parse_psplib_text(sm);
    *out = wrap(load_extension(project, default_extension(project, adaptation_from(options))));
    return MSR_OK;
  });
}

msr_status msr_instance_from_text(const char* psplib_text, const char* extension_json, msr_instance** out) {
  return guarded([&] {
    if (!psplib_text || !out) return fail(MSR_ERR_INVALID_ARGUMENT, "null argument");
    if (!extension_json) return fail(MSR_ERR_INVALID_ARGUMENT, "extension required");
    *out = wrap(load_extension(parse_psplib_text(psplib_text), extension_json));
    return MSR_OK;
  });
}

msr_status msr_default_extension(const char* psplib_path, const msr_adaptation* options, char** json) {
  return guarded([&] {
    if (!psplib_path) return fail(MSR_ERR_INVALID_ARGUMENT, "null argument");
    std::string sm;
    if (!read_file(psplib_path, sm)) return fail(MSR_ERR_IO, std::string("cannot read ") + psplib_path);
    return put(json, default_extension(parse_psplib_text(sm), adaptation_from(options)));
  });
}

void msr_instance_free(msr_instance* instance) { delete instance; }

int msr_instance_activity_count(const msr_instance* i) { return i ? i->instance->activity_count() : 0; }
int msr_instance_resource_count(const msr_instance* i) { return i ? i->instance->resource_count() : 0; }
int msr_instance_skill_count(const msr_instance* i) { return i ? i->instance->skill_count() : 0; }
const char* msr_instance_name(const msr_instance* i) { return i ? i->instance->name().c_str() : ""; }

msr_status msr_instance_warnings(const msr_instance* instance, char** text) {
  return guarded([&] {
    if (!instance) return fail(MSR_ERR_INVALID_ARGUMENT, "null instance");
    return put(text, join_lines(instance->warnings));
  });
}

msr_status msr_instance_validate(const msr_instance* instance, char** report, int* count) {
  return guarded([&] {
    if (!instance) return fail(MSR_ERR_INVALID_ARGUMENT, "null instance");
    const auto violations = validate(*instance->instance);
    if (count) *count = static_cast<int>(violations.size());
    return put(report, join_lines(violations));
  });
}

msr_status msr_instance_scale_rate(const msr_instance* instance, msr_rate rate, double factor, msr_instance** out) {
  return guarded([&] {
    if (!instance || !out) return fail(MSR_ERR_INVALID_ARGUMENT, "null argument");
    if (!(factor > 0)) return fail(MSR_ERR_INVALID_ARGUMENT, "factor must be > 0");
    ProjectInstance::Rate r = ProjectInstance::Rate::Disruption;
    if (rate == MSR_RATE_RETRIEVAL) r = ProjectInstance::Rate::Retrieval;
    else if (rate == MSR_RATE_SERVICE) r = ProjectInstance::Rate::Service;
    auto* copy = new msr_instance;
    copy->instance = std::make_shared<const ProjectInstance>(instance->instance->with_scaled_rate(r, factor));
    copy->warnings = instance->warnings;
    *out = copy;
    return MSR_OK;
  });
}

double msr_critical_rate(double mu, double upsilon, double r) {
  return critical_arrival_rate(params_of({0.0, mu, upsilon, r}));
}

msr_status msr_waiting_time(const msr_queue_point* point, double* wait) {
  return guarded([&] {
    if (!point || !wait) return fail(MSR_ERR_INVALID_ARGUMENT, "null argument");
    *wait = waiting_time(point->lambda, params_of(*point));
    return MSR_OK;
  });
}

msr_status msr_simulate(const msr_queue_point* point, double horizon, uint64_t seed, msr_sim_estimate* out) {
  return guarded([&] {
    if (!point || !out) return fail(MSR_ERR_INVALID_ARGUMENT, "null argument");
    const auto est = simulate_queue({point->lambda, params_of(*point)}, horizon, seed);
    out->mean_wait = est.mean_wait;
    out->half_width = est.half_width;
    out->samples = est.samples;
    return MSR_OK;
  });
}

msr_status msr_simulation_csv(const msr_queue_point* points, size_t count, double horizon, uint64_t seed,
                              char** csv, double* max_gap) {
  return guarded([&] {
    if (!points && count > 0) return fail(MSR_ERR_INVALID_ARGUMENT, "null points");
    std::vector<SimulationRow> rows;
    double gap = 0.0;
    for (size_t i = 0; i < count; ++i) {
      SimulationRow row;
      row.point = {points[i].lambda, params_of(points[i])};
      row.analytic_wait = waiting_time(row.point);
      row.estimate = simulate_queue(row.point, horizon, seed + i);
      gap = std::max(gap, row.relative_gap());
      rows.push_back(row);
    }
    if (max_gap) *max_gap = gap;
    return put(csv, simulation_csv(rows));
  });
}

msr_status msr_instance_queue(const msr_instance* instance, int resource, msr_queue_point* out) {
  return guarded([&] {
    if (!instance || !out) return fail(MSR_ERR_INVALID_ARGUMENT, "null argument");
    if (resource < 0 || resource >= instance->instance->resource_count())
      return fail(MSR_ERR_INVALID_ARGUMENT, "resource index out of range");
    const auto& p = instance->instance->resource(resource).reliability;
    *out = {0.0, p.service_rate, p.disruption_rate, p.retrieval_rate};
    return MSR_OK;
  });
}

void msr_solve_options_init(msr_solve_options* o) {
  if (!o) return;
  o->primary = MSR_MAKESPAN;
  o->has_budget = 0;
  o->budget = 0.0;
  o->augmented = 0;
  o->eps = 1e-4;
  o->range = 1.0;
  o->time_limit = 300.0;
  o->node_limit = 0;
}

msr_status msr_solve(const msr_instance* instance, const msr_solve_options* options, msr_solution** out) {
  return guarded([&] {
    if (!instance || !options || !out) return fail(MSR_ERR_INVALID_ARGUMENT, "null argument");
    SubproblemSpec spec;
    spec.primary = options->primary == MSR_COST ? Objective::Cost : Objective::Makespan;
    if (options->has_budget) spec.budget = options->budget;
    if (options->augmented) spec.augmentation = Augmentation{options->eps, options->range};
    const auto r = solve(*instance->instance, spec, limits_from(options->time_limit, options->node_limit));
    auto* sol = new msr_solution;
    sol->instance = instance->instance;
    sol->status = r.status;
    sol->schedule = r.solution;
    if (r.objectives) sol->values = *r.objectives;
    sol->slack = r.slack;
    sol->nodes = r.nodes_explored;
    sol->wall_time = r.wall_time;
    *out = sol;
    return MSR_OK;
  });
}

msr_status msr_lexicographic(const msr_instance* instance, msr_objective first, double time_limit,
                             msr_solution** out) {
  return guarded([&] {
    if (!instance || !out) return fail(MSR_ERR_INVALID_ARGUMENT, "null argument");
    const auto r = lexicographic_optimum(*instance->instance, first == MSR_COST ? Objective::Cost : Objective::Makespan,
                                         limits_from(time_limit, 0));
    auto* sol = new msr_solution;
    sol->instance = instance->instance;
    sol->status = r.status;
    sol->schedule = r.solution;
    sol->values = r.values;
    sol->nodes = r.nodes_explored;
    sol->wall_time = r.wall_time;
    *out = sol;
    return MSR_OK;
  });
}

void msr_solution_free(msr_solution* solution) { delete solution; }

msr_solve_status msr_solution_status(const msr_solution* s) { return s ? c_status(s->status) : MSR_INFEASIBLE; }
int msr_solution_has_schedule(const msr_solution* s) { return s && s->schedule ? 1 : 0; }
double msr_solution_makespan(const msr_solution* s) { return s ? s->values.makespan : 0.0; }
double msr_solution_cost(const msr_solution* s) { return s ? s->values.cost : 0.0; }
double msr_solution_slack(const msr_solution* s) { return s ? s->slack : 0.0; }
uint64_t msr_solution_nodes(const msr_solution* s) { return s ? s->nodes : 0; }
double msr_solution_wall_time(const msr_solution* s) { return s ? s->wall_time : 0.0; }

double msr_solution_arrival_rate(const msr_solution* s, int resource) {
  if (!s || !s->schedule || resource < 0 || resource >= static_cast<int>(s->schedule->arrival_rates.size()))
    return 0.0;
  return s->schedule->arrival_rates[resource];
}

msr_status msr_solution_violations(const msr_solution* s, char** report, int* count) {
  return guarded([&] {
    if (!s || !s->schedule) return fail(MSR_ERR_INFEASIBLE, "solution carries no schedule");
    std::vector<std::string> lines;
    for (const auto& v : check_feasibility(*s->instance, *s->schedule)) lines.push_back(v.label() + ": " + v.message);
    if (count) *count = static_cast<int>(lines.size());
    return put(report, join_lines(lines));
  });
}

msr_status msr_solution_gantt_csv(const msr_solution* s, char** csv) {
  return guarded([&] {
    if (!s || !s->schedule) return fail(MSR_ERR_INFEASIBLE, "solution carries no schedule");
    return put(csv, gantt_csv(to_gantt(*s->instance, *s->schedule)));
  });
}

msr_status msr_solution_gantt_svg(const msr_solution* s, const char* title, char** svg) {
  return guarded([&] {
    if (!s || !s->schedule) return fail(MSR_ERR_INFEASIBLE, "solution carries no schedule");
    return put(svg, gantt_svg(to_gantt(*s->instance, *s->schedule), title ? title : ""));
  });
}

void msr_front_options_init(msr_front_options* o) {
  if (!o) return;
  const FrontOptions f;
  o->grid_count = f.grid_count;
  o->eps = f.eps;
  o->augmented = f.augmented ? 1 : 0;
  o->bypass = f.bypass ? 1 : 0;
  o->threads = f.threads;
  o->time_limit = f.limits.time_seconds;
  o->node_limit = f.limits.node_limit;
}

msr_status msr_enumerate_front(const msr_instance* instance, const msr_front_options* options, msr_front** out) {
  return guarded([&] {
    if (!instance || !out) return fail(MSR_ERR_INVALID_ARGUMENT, "null argument");
    auto front = enumerate_front(*instance->instance, front_options_from(options));
    *out = new msr_front{instance->instance, std::move(front)};
    return MSR_OK;
  });
}

msr_status msr_brute_force_front(const msr_instance* instance, msr_front** out) {
  return guarded([&] {
    if (!instance || !out) return fail(MSR_ERR_INVALID_ARGUMENT, "null argument");
    auto front = brute_force_front(*instance->instance);
    *out = new msr_front{instance->instance, std::move(front)};
    return MSR_OK;
  });
}

void msr_front_free(msr_front* front) { delete front; }

size_t msr_front_size(const msr_front* front) { return front ? front->front.points.size() : 0; }

msr_status msr_front_point(const msr_front* front, size_t index, msr_point* out) {
  if (!front || !out) return fail(MSR_ERR_INVALID_ARGUMENT, "null argument");
  if (index >= front->front.points.size()) return fail(MSR_ERR_INVALID_ARGUMENT, "front point index out of range");
  const auto& p = front->front.points[index];
  *out = {p.makespan, p.cost, p.slack, p.grid_index, c_status(p.status), p.wall_time};
  return MSR_OK;
}

msr_status msr_front_payoff(const msr_front* front, msr_payoff* out) {
  if (!front || !out) return fail(MSR_ERR_INVALID_ARGUMENT, "null argument");
  const auto& t = front->front.payoff;
  *out = {{t.makespan_first.makespan, t.makespan_first.cost},
          {t.cost_first.makespan, t.cost_first.cost},
          {t.pis.makespan, t.pis.cost},
          {t.nis.makespan, t.nis.cost}};
  return MSR_OK;
}

const char* msr_front_diagnosis(const msr_front* front) { return front ? front->front.diagnosis.c_str() : ""; }

msr_status msr_front_csv(const msr_front* front, int timing, char** csv) {
  return guarded([&] {
    if (!front) return fail(MSR_ERR_INVALID_ARGUMENT, "null front");
    return put(csv, front_csv(front->front, timing != 0));
  });
}

msr_status msr_front_gantt_csv(const msr_front* front, size_t index, char** csv) {
  return guarded([&] { return put(csv, gantt_csv(to_gantt(*front->instance, *front_schedule(front, index)))); });
}

msr_status msr_front_gantt_svg(const msr_front* front, size_t index, const char* title, char** svg) {
  return guarded([&] {
    return put(svg, gantt_svg(to_gantt(*front->instance, *front_schedule(front, index)), title ? title : ""));
  });
}

msr_status msr_rank_front(const msr_front* front, double weight_makespan, double weight_cost, double v,
                          msr_ranking** out) {
  return guarded([&] {
    if (!front || !out) return fail(MSR_ERR_INVALID_ARGUMENT, "null argument");
    VikorOptions o;
    o.weights = {weight_makespan, weight_cost};
    o.v = v;
    *out = new msr_ranking{rank(front->front, o)};
    return MSR_OK;
  });
}

msr_status msr_rank_values(const double* makespans, const double* costs, size_t count, double weight_makespan,
                           double weight_cost, double v, msr_ranking** out) {
  return guarded([&] {
    if ((!makespans || !costs) && count > 0) return fail(MSR_ERR_INVALID_ARGUMENT, "null values");
    if (!out) return fail(MSR_ERR_INVALID_ARGUMENT, "null output pointer");
    std::vector<ObjectiveValues> values;
    for (size_t i = 0; i < count; ++i) values.push_back({makespans[i], costs[i]});
    VikorOptions o;
    o.weights = {weight_makespan, weight_cost};
    o.v = v;
    *out = new msr_ranking{rank(values, o)};
    return MSR_OK;
  });
}

void msr_ranking_free(msr_ranking* ranking) { delete ranking; }

size_t msr_ranking_size(const msr_ranking* r) { return r ? r->ranking.scores.size() : 0; }

msr_status msr_ranking_score(const msr_ranking* r, size_t index, msr_score* out) {
  if (!r || !out) return fail(MSR_ERR_INVALID_ARGUMENT, "null argument");
  if (index >= r->ranking.scores.size()) return fail(MSR_ERR_INVALID_ARGUMENT, "alternative index out of range");
  const auto& s = r->ranking.scores[index];
  *out = {s.S, s.R, s.Q, s.rank, s.in_compromise_set ? 1 : 0};
  return MSR_OK;
}

msr_status msr_ranking_at(const msr_ranking* r, size_t position, size_t* index) {
  if (!r || !index) return fail(MSR_ERR_INVALID_ARGUMENT, "null argument");
  if (position >= r->ranking.order.size()) return fail(MSR_ERR_INVALID_ARGUMENT, "rank position out of range");
  *index = static_cast<size_t>(r->ranking.order[position]);
  return MSR_OK;
}

msr_status msr_ranking_warnings(const msr_ranking* r, char** text) {
  return guarded([&] {
    if (!r) return fail(MSR_ERR_INVALID_ARGUMENT, "null ranking");
    return put(text, join_lines(r->ranking.warnings));
  });
}

msr_status msr_ranking_csv(const msr_ranking* r, char** csv) {
  return guarded([&] {
    if (!r) return fail(MSR_ERR_INVALID_ARGUMENT, "null ranking");
    return put(csv, ranking_csv(r->ranking));
  });
}

msr_status msr_summary_table(const msr_front* front, const msr_ranking* r, char** text) {
  return guarded([&] {
    if (!front || !r) return fail(MSR_ERR_INVALID_ARGUMENT, "null argument");
    return put(text, summary_table(front->front, r->ranking));
  });
}

msr_status msr_sweep_run(const msr_instance* instance, msr_rate rate, const double* multipliers, size_t count,
                         const msr_front_options* options, int workers, msr_sweep** out) {
  return guarded([&] {
    if (!instance || !out || (!multipliers && count > 0)) return fail(MSR_ERR_INVALID_ARGUMENT, "null argument");
    if (rate == MSR_RATE_SERVICE) return fail(MSR_ERR_INVALID_ARGUMENT, "sweeps cover retrieval or disruption");
    const auto parameter = rate == MSR_RATE_RETRIEVAL ? SweepParameter::Retrieval : SweepParameter::Disruption;
    auto report = sensitivity_sweep(*instance->instance, parameter, std::vector<double>(multipliers, multipliers + count),
                                    front_options_from(options), workers);
    *out = new msr_sweep{std::move(report)};
    return MSR_OK;
  });
}

void msr_sweep_free(msr_sweep* sweep) { delete sweep; }

msr_status msr_sweep_csv(const msr_sweep* sweep, char** csv) {
  return guarded([&] {
    if (!sweep) return fail(MSR_ERR_INVALID_ARGUMENT, "null sweep");
    return put(csv, sweep_csv(sweep->report));
  });
}

}  // extern "C"
