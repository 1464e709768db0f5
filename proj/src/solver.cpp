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

#include "msrcpspr/solver.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "msrcpspr/errors.hpp"
#include "msrcpspr/queueing.hpp"

namespace msrcpspr {
namespace {

using Clock = std::chrono::steady_clock;
using Mask = std::uint64_t;
constexpr double kInf = std::numeric_limits<double>::infinity();

double budget_tolerance(double budget) { return 1e-9 * (1.0 + std::fabs(budget)); }

/// Static precedence data shared by the bounds.
struct Network {
  int n = 0;
  std::vector<int> duration;
  std::vector<std::vector<int>> succ;
  std::vector<int> topo;
  std::vector<double> tail_after;  // longest duration path from completion to the end

  explicit Network(const ProjectInstance& instance) : n(instance.activity_count()) {
    duration.resize(n);
    succ.resize(n);
    for (int i = 0; i < n; ++i) {
      duration[i] = instance.duration(i);
      succ[i] = instance.successors(i);
    }
    auto order = topological_order(succ);
    if (!order) throw CycleError("precedence graph contains a cycle");
    topo = std::move(*order);
    std::vector<double> length_from(n, 0.0);
    tail_after.assign(n, 0.0);
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
      double after = 0.0;
      for (int j : succ[*it]) after = std::max(after, length_from[j]);
      tail_after[*it] = after;
      length_from[*it] = duration[*it] + after;
    }
  }

  /// max(critical path with waits T, per-resource chain bounds).
  double makespan_bound(const std::vector<double>& T, const std::vector<Mask>& chain, int resources) const {
    std::vector<double> est(n, 0.0);
    for (int i : topo) {
      const double release = est[i] + duration[i] + T[i];
      for (int j : succ[i]) est[j] = std::max(est[j], release);
    }
    double bound = n > 0 ? est[n - 1] : 0.0;
    for (int k = 0; k < resources; ++k) {
      double head = kInf, tail = kInf, load = 0.0;
      bool any = false;
      for (int i = 0; i < n; ++i) {
        if (!(chain[i] >> k & 1U)) continue;
        any = true;
        head = std::min(head, est[i]);
        tail = std::min(tail, tail_after[i]);
        load += duration[i] + T[i];
      }
      if (any) bound = std::max(bound, head + load + tail);
    }
    return bound;
  }
};

struct Option {
  Mask mask = 0;
  std::vector<std::pair<int, int>> units;  // (skill, resource)
  double cost = 0.0;
  std::vector<int> resources;  // ascending
};

// Every way to give activity i its demanded units with distinct, qualified
// resources; units of the same skill are chosen as combinations.
void for_each_unit_assignment(const ProjectInstance& instance, int i,
                              const std::function<void(const std::vector<std::pair<int, int>>&)>& visit) {
  std::vector<std::pair<int, int>> demands(instance.activity(i).skill_requirements.begin(),
                                           instance.activity(i).skill_requirements.end());
  std::vector<std::pair<int, int>> units;
  std::vector<char> used(instance.resource_count(), 0);
  std::function<void(std::size_t, int, int)> rec = [&](std::size_t d, int remaining, int from) {
    if (d == demands.size()) {
      visit(units);
      return;
    }
    const int skill = demands[d].first;
    if (remaining == 0) {
      const int next = d + 1 < demands.size() ? demands[d + 1].second : 0;
      rec(d + 1, next, 0);
      return;
    }
    for (int k = from; k < instance.resource_count(); ++k) {
      if (used[k] || !instance.resource(k).masters(skill)) continue;
      used[k] = 1;
      units.emplace_back(skill, k);
      rec(d, remaining - 1, k + 1);
      units.pop_back();
      used[k] = 0;
    }
  };
  rec(0, demands.empty() ? 0 : demands.front().second, 0);
}

struct Budget {
  Clock::time_point start = Clock::now();
  double seconds = kInf;
  std::uint64_t node_limit = 0;
  std::uint64_t nodes = 0;
  bool aborted = false;

  bool tick() {
    ++nodes;
    if (aborted) return false;
    if (node_limit != 0 && nodes > node_limit) aborted = true;
    if ((nodes & 255U) == 0 && std::chrono::duration<double>(Clock::now() - start).count() > seconds) aborted = true;
    return !aborted;
  }
  double elapsed() const { return std::chrono::duration<double>(Clock::now() - start).count(); }
};

/// Orients the resource conflicts of a fixed assignment to minimize the
/// makespan, looking only for schedules strictly below `cutoff`.
class Sequencer {
 public:
  Sequencer(const Network& net, const std::vector<Mask>& masks, const std::vector<double>& T, int resources,
            Budget& budget)
      : net_(net), masks_(masks), budget_(budget), n_(net.n), resources_(resources) {
    weight_.resize(n_);
    for (int i = 0; i < n_; ++i) weight_[i] = net.duration[i] + T[i];
    adj_ = net.succ;
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if (masks[i] & masks[j]) pairs_.emplace_back(i, j);
  }

  bool run(double cutoff) {
    cutoff_ = cutoff;
    found_ = false;
    dfs();
    return found_;
  }
  double makespan() const { return best_makespan_; }
  const std::vector<std::pair<int, int>>& orientation() const { return best_orientation_; }

 private:
  void dfs() {
    if (!budget_.tick()) return;
    const int n = n_;
    auto order = topological_order(adj_);
    std::vector<double> est(n, 0.0), q(n, 0.0);
    for (int i : *order)
      for (int j : adj_[i]) est[j] = std::max(est[j], est[i] + weight_[i]);
    for (auto it = order->rbegin(); it != order->rend(); ++it) {
      double after = 0.0;
      for (int j : adj_[*it]) after = std::max(after, q[j]);
      q[*it] = weight_[*it] + after;
    }
    double bound = est[n - 1];
    for (int k = 0; k < resources_; ++k) {
      double head = kInf, tail = kInf, load = 0.0;
      bool any = false;
      for (int i = 0; i < n; ++i) {
        if (!(masks_[i] >> k & 1U)) continue;
        any = true;
        head = std::min(head, est[i]);
        tail = std::min(tail, q[i] - weight_[i]);
        load += weight_[i];
      }
      if (any) bound = std::max(bound, head + load + tail);
    }
    if (!(bound < cutoff_)) return;

    std::vector<Mask> reach(n, 0);
    for (auto it = order->rbegin(); it != order->rend(); ++it)
      for (int j : adj_[*it]) reach[*it] |= reach[j] | (Mask{1} << j);

    int pick = -1;
    double key = kInf;
    for (int p = 0; p < static_cast<int>(pairs_.size()); ++p) {
      const auto [i, j] = pairs_[p];
      if ((reach[i] >> j & 1U) || (reach[j] >> i & 1U)) continue;
      const double k = std::min(est[i], est[j]);
      if (k < key) {
        key = k;
        pick = p;
      }
    }
    if (pick < 0) {
      best_makespan_ = est[n - 1];
      cutoff_ = best_makespan_;
      found_ = true;
      best_orientation_.clear();
      for (auto [i, j] : pairs_) {
        if (reach[i] >> j & 1U) best_orientation_.emplace_back(i, j);
        else best_orientation_.emplace_back(j, i);
      }
      return;
    }
    auto [i, j] = pairs_[pick];
    if (est[j] < est[i]) std::swap(i, j);
    for (int side = 0; side < 2; ++side) {
      const int from = side == 0 ? i : j;
      const int to = side == 0 ? j : i;
      adj_[from].push_back(to);
      dfs();
      adj_[from].pop_back();
      if (budget_.aborted) return;
    }
  }

  const Network& net_;
  const std::vector<Mask>& masks_;
  Budget& budget_;
  int n_;
  int resources_;
  std::vector<double> weight_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::pair<int, int>> pairs_;
  double cutoff_ = kInf;
  bool found_ = false;
  double best_makespan_ = kInf;
  std::vector<std::pair<int, int>> best_orientation_;
};

}  // namespace

namespace detail {

struct SolverModel {
  const ProjectInstance& instance;
  Network net;
  int n;
  int resources;
  std::vector<int> order;                   // executable activities, topological
  std::vector<std::vector<Option>> options;  // per activity
  std::vector<Mask> forced;                  // resources every option of i uses
  std::vector<double> cost_tail;             // min remaining cost from position p of `order`
  std::vector<std::vector<double>> wait_table;  // [k][lambda] over stable loads
  bool unassignable = false;

  explicit SolverModel(const ProjectInstance& inst)
      : instance(inst), net(inst), n(inst.activity_count()), resources(inst.resource_count()) {
    if (resources > 64) throw std::invalid_argument("solver supports at most 64 resources");
    if (n > 64) throw std::invalid_argument("solver supports at most 64 activities");
    for (int i : net.topo)
      if (!inst.is_dummy(i)) order.push_back(i);
    options.resize(n);
    forced.assign(n, 0);
    for (int i : order) {
      std::vector<Option> all;
      for_each_unit_assignment(inst, i, [&](const std::vector<std::pair<int, int>>& units) {
        Option opt;
        opt.units = units;
        for (auto [skill, k] : units) {
          opt.mask |= Mask{1} << k;
          opt.cost += inst.duration(i) * inst.resource(k).cost(skill);
          opt.resources.push_back(k);
        }
        std::sort(opt.resources.begin(), opt.resources.end());
        all.push_back(std::move(opt));
      });
      // Options sharing a resource set differ only in cost: keep the cheapest.
      std::stable_sort(all.begin(), all.end(), [](const Option& a, const Option& b) {
        return a.cost != b.cost ? a.cost < b.cost : a.resources < b.resources;
      });
      std::vector<Mask> seen;
      for (auto& opt : all) {
        if (std::find(seen.begin(), seen.end(), opt.mask) != seen.end()) continue;
        seen.push_back(opt.mask);
        options[i].push_back(std::move(opt));
      }
      if (options[i].empty()) unassignable = true;
      Mask common = ~Mask{0};
      for (const auto& opt : options[i]) common &= opt.mask;
      forced[i] = options[i].empty() ? 0 : common;
    }
    cost_tail.assign(order.size() + 1, 0.0);
    for (int p = static_cast<int>(order.size()) - 1; p >= 0; --p)
      cost_tail[p] = cost_tail[p + 1] + (options[order[p]].empty() ? 0.0 : options[order[p]].front().cost);
    wait_table.resize(resources);
    for (int k = 0; k < resources; ++k) {
      const auto& params = inst.resource(k).reliability;
      const double critical = critical_arrival_rate(params);
      for (int load = 0; load < critical && load <= n; ++load) wait_table[k].push_back(waiting_time(load, params));
    }
  }

  int capacity(int k) const { return static_cast<int>(wait_table[k].size()) - 1; }
};

}  // namespace detail

namespace {

class Search {
 public:
  Search(const detail::SolverModel& model, const SubproblemSpec& spec, Budget& budget)
      : m_(model), spec_(spec), budget_(budget) {
    if (spec.budget) {
      e_ = *spec.budget;
      e_tol_ = budget_tolerance(e_);
      if (spec.augmentation) {
        const double range = spec.augmentation->range > 0 ? spec.augmentation->range : 1.0;
        a_ = spec.augmentation->eps / range;
      }
    }
    choice_.assign(m_.n, -1);
    load_.assign(m_.resources, 0);
    masks_.assign(m_.n, 0);
  }

  void run() { descend(0); }

  bool has_best() const { return has_best_; }
  const std::vector<int>& best_choice() const { return best_choice_; }
  const std::vector<std::pair<int, int>>& best_orientation() const { return best_orientation_; }

 private:
  bool makespan_primary() const { return spec_.primary == Objective::Makespan; }

  double objective(double makespan, double cost) const {
    if (!spec_.budget) return makespan_primary() ? makespan : cost;
    return makespan_primary() ? makespan - a_ * (e_ - cost) : cost - a_ * (e_ - makespan);
  }

  // Lower bound on the makespan of any completion of the current partial
  // assignment; nullopt when some remaining activity has no stable option.
  std::optional<double> makespan_bound(std::size_t pos) const {
    std::vector<double> T(m_.n, 0.0);
    std::vector<Mask> chain(m_.n, 0);
    for (std::size_t p = 0; p < m_.order.size(); ++p) {
      const int i = m_.order[p];
      if (p < pos) {
        chain[i] = masks_[i];
        for (Mask bits = masks_[i]; bits; bits &= bits - 1) {
          const int k = std::countr_zero(bits);
          T[i] = std::max(T[i], m_.wait_table[k][load_[k]]);
        }
        continue;
      }
      double best = kInf;
      for (const auto& opt : m_.options[i]) {
        double t = 0.0;
        bool stable = true;
        for (Mask bits = opt.mask; bits; bits &= bits - 1) {
          const int k = std::countr_zero(bits);
          if (load_[k] + 1 > m_.capacity(k)) {
            stable = false;
            break;
          }
          t = std::max(t, m_.wait_table[k][load_[k] + 1]);
        }
        if (stable) best = std::min(best, t);
      }
      if (best == kInf) return std::nullopt;
      T[i] = best;
      chain[i] = m_.forced[i];
    }
    return m_.net.makespan_bound(T, chain, m_.resources);
  }

  void descend(std::size_t pos) {
    if (!budget_.tick()) return;
    const double cost_bound = cost_ + m_.cost_tail[pos];
    if (spec_.budget && makespan_primary() && cost_bound > e_ + e_tol_) return;
    const auto ms_bound = makespan_bound(pos);
    if (!ms_bound) return;
    if (spec_.budget && !makespan_primary() && *ms_bound > e_ + e_tol_) return;
    if (has_best_ && objective(*ms_bound, cost_bound) >= best_obj_) return;

    if (pos == m_.order.size()) {
      sequence_leaf();
      return;
    }
    const int i = m_.order[pos];
    const auto& options = m_.options[i];
    for (int o = 0; o < static_cast<int>(options.size()); ++o) {
      const Option& opt = options[o];
      bool stable = true;
      for (Mask bits = opt.mask; bits; bits &= bits - 1)
        if (load_[std::countr_zero(bits)] + 1 > m_.capacity(std::countr_zero(bits))) stable = false;
      if (!stable) continue;
      for (Mask bits = opt.mask; bits; bits &= bits - 1) ++load_[std::countr_zero(bits)];
      choice_[i] = o;
      masks_[i] = opt.mask;
      cost_ += opt.cost;
      descend(pos + 1);
      cost_ -= opt.cost;
      masks_[i] = 0;
      choice_[i] = -1;
      for (Mask bits = opt.mask; bits; bits &= bits - 1) --load_[std::countr_zero(bits)];
      if (budget_.aborted) return;
    }
  }

  void sequence_leaf() {
    std::vector<double> T(m_.n, 0.0);
    for (int i : m_.order)
      for (Mask bits = masks_[i]; bits; bits &= bits - 1) {
        const int k = std::countr_zero(bits);
        T[i] = std::max(T[i], m_.wait_table[k][load_[k]]);
      }
    double cutoff = kInf;
    if (makespan_primary()) {
      if (has_best_) cutoff = best_obj_ + a_ * (spec_.budget ? e_ - cost_ : 0.0);
    } else {
      if (spec_.budget) cutoff = e_ + e_tol_;
      if (has_best_) {
        if (a_ > 0) cutoff = std::min(cutoff, (best_obj_ - cost_) / a_ + e_);
        else if (!(cost_ < best_obj_)) return;
      }
    }
    Sequencer sequencer(m_.net, masks_, T, m_.resources, budget_);
    if (!sequencer.run(cutoff)) return;
    const double obj = objective(sequencer.makespan(), cost_);
    if (has_best_ && !(obj < best_obj_)) return;
    has_best_ = true;
    best_obj_ = obj;
    best_choice_ = choice_;
    best_orientation_ = sequencer.orientation();
  }

  const detail::SolverModel& m_;
  const SubproblemSpec& spec_;
  Budget& budget_;
  double e_ = kInf;
  double e_tol_ = 0.0;
  double a_ = 0.0;

  std::vector<int> choice_;
  std::vector<int> load_;
  std::vector<Mask> masks_;
  double cost_ = 0.0;

  bool has_best_ = false;
  double best_obj_ = kInf;
  std::vector<int> best_choice_;
  std::vector<std::pair<int, int>> best_orientation_;
};

}  // namespace

Solver::Solver(const ProjectInstance& instance) : model_(std::make_unique<detail::SolverModel>(instance)) {}
Solver::~Solver() = default;

const ProjectInstance& Solver::instance() const { return model_->instance; }

SolveResult Solver::solve(const SubproblemSpec& spec, const SolveLimits& limits) const {
  if (spec.augmentation) {
    const double eps = spec.augmentation->eps;
    if (!(eps >= 1e-6 && eps <= 1e-3)) throw std::invalid_argument("eps must lie in [1e-6, 1e-3]");
  }
  if (spec.budget && !(*spec.budget >= 0.0)) throw std::invalid_argument("budget must be >= 0");

  Budget budget;
  budget.seconds = limits.time_seconds > 0 ? limits.time_seconds : kInf;
  budget.node_limit = limits.node_limit;
  SolveResult result;
  if (model_->unassignable) {
    result.status = SolveStatus::Infeasible;
    result.wall_time = budget.elapsed();
    return result;
  }

  Search search(*model_, spec, budget);
  search.run();
  result.nodes_explored = budget.nodes;
  if (search.has_best()) {
    const auto& inst = model_->instance;
    AssignmentTensor X(inst);
    for (int i : model_->order)
      for (auto [skill, k] : model_->options[i][search.best_choice()[i]].units) X.set(i, skill, k);
    BoolMatrix Z(inst.activity_count(), inst.activity_count());
    for (auto [i, j] : search.best_orientation()) Z.set(i, j);
    result.solution = tighten_starts(inst, X, Z);
    result.objectives = evaluate(inst, *result.solution);
    if (spec.budget) {
      const double secondary =
          spec.primary == Objective::Makespan ? result.objectives->cost : result.objectives->makespan;
      result.slack = std::max(0.0, *spec.budget - secondary);
    }
  }
  if (budget.aborted) result.status = SolveStatus::Timeout;
  else result.status = search.has_best() ? SolveStatus::Optimal : SolveStatus::Infeasible;
  result.wall_time = budget.elapsed();
  return result;
}

SolveResult solve(const ProjectInstance& instance, const SubproblemSpec& spec, const SolveLimits& limits) {
  return Solver(instance).solve(spec, limits);
}

LexicographicResult lexicographic_optimum(const Solver& solver, Objective first, const SolveLimits& limits) {
  LexicographicResult out;
  SubproblemSpec stage1;
  stage1.primary = first;
  const SolveResult r1 = solver.solve(stage1, limits);
  out.nodes_explored = r1.nodes_explored;
  out.wall_time = r1.wall_time;
  if (r1.status != SolveStatus::Optimal) {
    out.status = r1.status;
    if (r1.objectives) {
      out.values = *r1.objectives;
      out.solution = r1.solution;
    }
    return out;
  }
  const double optimum = first == Objective::Makespan ? r1.objectives->makespan : r1.objectives->cost;
  SubproblemSpec stage2;
  stage2.primary = first == Objective::Makespan ? Objective::Cost : Objective::Makespan;
  stage2.budget = optimum;
  const SolveResult r2 = solver.solve(stage2, limits);
  out.nodes_explored += r2.nodes_explored;
  out.wall_time += r2.wall_time;
  // Stage 2 always admits the stage-1 solution, so it cannot be infeasible.
  const SolveResult& chosen = r2.objectives ? r2 : r1;
  out.status = r2.status == SolveStatus::Timeout ? SolveStatus::Timeout : SolveStatus::Optimal;
  out.values = *chosen.objectives;
  out.solution = chosen.solution;
  return out;
}

LexicographicResult lexicographic_optimum(const ProjectInstance& instance, Objective first,
                                          const SolveLimits& limits) {
  return lexicographic_optimum(Solver(instance), first, limits);
}

double critical_path_bound(const ProjectInstance& instance) {
  const Network net(instance);
  return net.makespan_bound(std::vector<double>(net.n, 0.0), std::vector<Mask>(net.n, 0), 0);
}

double assignment_makespan_bound(const ProjectInstance& instance, const AssignmentTensor& X) {
  const Network net(instance);
  const int r = instance.resource_count();
  if (r > 64) throw std::invalid_argument("at most 64 resources");
  std::vector<double> W(r, 0.0);
  std::vector<Mask> chain(net.n, 0);
  std::vector<int> load(r, 0);
  for (int i = 0; i < net.n; ++i)
    for (int k = 0; k < r; ++k)
      if (const int s = X.skills_on(i, k); s > 0) {
        load[k] += s;
        chain[i] |= Mask{1} << k;
      }
  for (int k = 0; k < r; ++k) W[k] = waiting_time(load[k], instance.resource(k).reliability);
  std::vector<double> T(net.n, 0.0);
  for (int i = 0; i < net.n; ++i)
    for (int k = 0; k < r; ++k)
      if (chain[i] >> k & 1U) T[i] = std::max(T[i], W[k]);
  return net.makespan_bound(T, chain, r);
}

ParetoFront brute_force_front(const ProjectInstance& instance) {
  const int n = instance.activity_count();
  const int r = instance.resource_count();
  if (n - 2 > 6 || r > 4 || instance.skill_count() > 3)
    throw std::invalid_argument("brute_force_front refuses instances above 6 activities, 4 resources, 3 skills");

  std::vector<std::vector<std::vector<std::pair<int, int>>>> choices(n);
  for (int i = 1; i + 1 < n; ++i)
    for_each_unit_assignment(instance, i, [&](const auto& units) { choices[i].push_back(units); });

  // Transitive precedence: pairs ordered by it admit only one orientation.
  std::vector<std::vector<char>> before(n, std::vector<char>(n, 0));
  for (int i = n - 1; i >= 0; --i)
    for (int j : instance.successors(i)) {
      before[i][j] = 1;
      for (int m = 0; m < n; ++m)
        if (before[j][m]) before[i][m] = 1;
    }

  std::vector<ParetoPoint> found;
  AssignmentTensor X(instance);
  std::function<void(int)> assign = [&](int i) {
    if (i == n - 1) {
      std::vector<std::pair<int, int>> fixed, free;
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
          bool shared = false;
          for (int k = 0; k < r && !shared; ++k) shared = X.skills_on(a, k) > 0 && X.skills_on(b, k) > 0;
          if (!shared) continue;
          if (before[a][b]) fixed.emplace_back(a, b);
          else if (before[b][a]) fixed.emplace_back(b, a);
          else free.emplace_back(a, b);
        }
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << free.size()); ++bits) {
        BoolMatrix Z(n, n);
        for (auto [a, b] : fixed) Z.set(a, b);
        for (std::size_t p = 0; p < free.size(); ++p) {
          auto [a, b] = free[p];
          if (bits >> p & 1U) Z.set(b, a);
          else Z.set(a, b);
        }
        ScheduleSolution sol;
        try {
          sol = tighten_starts(instance, X, Z);
        } catch (const InstabilityError&) {
          return;
        } catch (const CycleError&) {
          continue;
        }
        const ObjectiveValues v = evaluate(instance, sol);
        ParetoPoint point;
        point.makespan = v.makespan;
        point.cost = v.cost;
        point.solution = std::make_shared<const ScheduleSolution>(std::move(sol));
        found.push_back(std::move(point));
      }
      if (found.size() > 4096) found = dominance_filter(std::move(found));
      return;
    }
    if (i == 0 || instance.is_dummy(i)) {
      assign(i + 1);
      return;
    }
    for (const auto& units : choices[i]) {
      for (auto [skill, k] : units) X.set(i, skill, k);
      assign(i + 1);
      for (auto [skill, k] : units) X.set(i, skill, k, false);
    }
  };
  if (n >= 2) assign(0);

  ParetoFront front;
  front.points = dominance_filter(std::move(found));
  if (front.points.empty()) {
    front.diagnosis = "no feasible schedule";
    return front;
  }
  const auto& first = front.points.front();
  const auto& last = front.points.back();
  front.payoff.makespan_first = {first.makespan, first.cost};
  front.payoff.cost_first = {last.makespan, last.cost};
  front.payoff.pis = {first.makespan, last.cost};
  front.payoff.nis = {last.makespan, first.cost};
  return front;
}

}  // namespace msrcpspr
