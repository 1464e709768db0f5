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

// Command-line front end. Talks to the library only through msrcpspr.h.
#include <CLI11.hpp>

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "msrcpspr/msrcpspr.h"

namespace fs = std::filesystem;

namespace {

constexpr int kOk = 0;
constexpr int kNoResult = 1;
constexpr int kInputError = 2;

void log(const std::string& message) { std::fprintf(stderr, "msrcpspr: %s\n", message.c_str()); }

int exit_code(msr_status status) {
  if (status == MSR_OK) return kOk;
  if (status == MSR_ERR_INFEASIBLE) return kNoResult;
  return kInputError;
}

int report(msr_status status) {
  log(msr_last_error());
  return exit_code(status);
}

// Owning wrappers for C handles and strings.
template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Instance = std::unique_ptr<msr_instance, Deleter<msr_instance, msr_instance_free>>;
using Solution = std::unique_ptr<msr_solution, Deleter<msr_solution, msr_solution_free>>;
using Front = std::unique_ptr<msr_front, Deleter<msr_front, msr_front_free>>;
using Ranking = std::unique_ptr<msr_ranking, Deleter<msr_ranking, msr_ranking_free>>;
using Sweep = std::unique_ptr<msr_sweep, Deleter<msr_sweep, msr_sweep_free>>;

// Shortest text that reads back to the same double, as in the library CSVs.
std::string number(double value) {
  if (value == 0.0) return "0";
  char buf[32];
  return std::string(buf, std::to_chars(buf, buf + sizeof buf, value).ptr);
}

std::string take(char* text) {
  std::string out = text ? text : "";
  msr_string_free(text);
  return out;
}

struct Common {
  std::string instance;
  std::string extension;
  bool default_extension = false;
  std::string out = ".";
  double time_limit = 300.0;
};

struct FrontFlags {
  int grid = 10;
  double eps = 1e-4;
  bool no_bypass = false;
  bool plain = false;
};

void add_instance_flags(CLI::App* cmd, Common& c, bool need_out = true) {
  cmd->add_option("--instance", c.instance, "PSPLIB single-mode .sm file")->required()->check(CLI::ExistingFile);
  cmd->add_option("--extension", c.extension, "JSON sidecar with skills, resources and requirements");
  cmd->add_flag("--default-extension", c.default_extension, "use the built-in deterministic adaptation");
  if (need_out) cmd->add_option("--out", c.out, "output directory")->capture_default_str();
}

void add_front_flags(CLI::App* cmd, FrontFlags& f) {
  cmd->add_option("--grid", f.grid, "number of grid intervals N")->check(CLI::Range(2, 100000))->capture_default_str();
  cmd->add_option("--eps", f.eps, "slack reward coefficient")->check(CLI::Range(1e-6, 1e-3))->capture_default_str();
  cmd->add_flag("--no-bypass", f.no_bypass, "solve every grid point (allows parallel workers)");
  cmd->add_flag("--plain", f.plain, "plain epsilon-constraint sweep without slack reward");
}

msr_status load(const Common& c, Instance& out) {
  msr_instance* raw = nullptr;
  msr_status status;
  if (!c.extension.empty()) {
    status = msr_instance_load(c.instance.c_str(), c.extension.c_str(), &raw);
  } else if (c.default_extension) {
    status = msr_instance_load_default(c.instance.c_str(), nullptr, &raw);
  } else {
    // Parses the network anyway so structural errors are reported first.
    status = msr_instance_load(c.instance.c_str(), nullptr, &raw);
  }
  if (status != MSR_OK) return status;
  out.reset(raw);
  char* warnings = nullptr;
  if (msr_instance_warnings(raw, &warnings) == MSR_OK) {
    std::istringstream lines(take(warnings));
    for (std::string line; std::getline(lines, line);) log("warning: " + line);
  }
  return MSR_OK;
}

bool write_file(const fs::path& path, const std::string& text) {
  std::error_code ec;
  if (path.has_parent_path()) fs::create_directories(path.parent_path(), ec);
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    log("cannot write " + path.string());
    return false;
  }
  f << text;
  log("wrote " + path.string());
  return static_cast<bool>(f);
}

msr_front_options front_options(const FrontFlags& f, double time_limit, int threads) {
  msr_front_options o;
  msr_front_options_init(&o);
  o.grid_count = f.grid;
  o.eps = f.eps;
  o.augmented = f.plain ? 0 : 1;
  o.bypass = f.no_bypass || f.plain ? 0 : 1;
  o.threads = threads;
  o.time_limit = time_limit;
  return o;
}

int worker_count() {
  if (const char* env = std::getenv("MSRCPSPR_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<int>(v);
  }
  return 1;
}

int cmd_validate(const Common& c) {
  Instance inst;
  if (auto s = load(c, inst); s != MSR_OK) return report(s);
  char* text = nullptr;
  int count = 0;
  if (auto s = msr_instance_validate(inst.get(), &text, &count); s != MSR_OK) return report(s);
  const std::string violations = take(text);
  std::printf("instance %s: %d activities, %d resources, %d skills\n", msr_instance_name(inst.get()),
              msr_instance_activity_count(inst.get()), msr_instance_resource_count(inst.get()),
              msr_instance_skill_count(inst.get()));
  if (count == 0) {
    std::printf("valid\n");
    return kOk;
  }
  std::printf("%d violation(s):\n%s", count, violations.c_str());
  return kInputError;
}

int solve_to(const Common& c, const std::string& objective, const std::optional<double>& budget, Solution& out) {
  Instance inst;
  if (auto s = load(c, inst); s != MSR_OK) return report(s);
  const msr_objective primary = objective == "cost" ? MSR_COST : MSR_MAKESPAN;
  msr_solution* raw = nullptr;
  msr_status status;
  if (budget) {
    msr_solve_options o;
    msr_solve_options_init(&o);
    o.primary = primary;
    o.has_budget = 1;
    o.budget = *budget;
    o.time_limit = c.time_limit;
    status = msr_solve(inst.get(), &o, &raw);
  } else {
    status = msr_lexicographic(inst.get(), primary, c.time_limit, &raw);
  }
  if (status != MSR_OK) return report(status);
  out.reset(raw);
  return kOk;
}

int cmd_solve(const Common& c, const std::string& objective, const std::optional<double>& budget) {
  Solution sol;
  if (int rc = solve_to(c, objective, budget, sol); rc != kOk) return rc;
  const auto status = msr_solution_status(sol.get());
  static const char* kNames[] = {"optimal", "infeasible", "timeout"};
  std::ostringstream csv;
  csv << "objective,status,makespan,cost,slack,nodes\n" << objective << ',' << kNames[status] << ',';
  if (msr_solution_has_schedule(sol.get())) {
    csv << number(msr_solution_makespan(sol.get())) << ',' << number(msr_solution_cost(sol.get())) << ','
        << number(msr_solution_slack(sol.get()));
  } else {
    csv << ",,";
  }
  csv << ',' << msr_solution_nodes(sol.get()) << '\n';
  if (!write_file(fs::path(c.out) / "solve.csv", csv.str())) return kInputError;
  if (msr_solution_has_schedule(sol.get())) {
    std::printf("%s: makespan %.6f cost %.2f (%llu nodes)\n", kNames[status], msr_solution_makespan(sol.get()),
                msr_solution_cost(sol.get()), static_cast<unsigned long long>(msr_solution_nodes(sol.get())));
  } else {
    std::printf("%s: no schedule\n", kNames[status]);
  }
  return status == MSR_OPTIMAL ? kOk : kNoResult;
}

int cmd_gantt(const Common& c, const std::string& objective, const std::optional<double>& budget) {
  Solution sol;
  if (int rc = solve_to(c, objective, budget, sol); rc != kOk) return rc;
  if (!msr_solution_has_schedule(sol.get())) {
    log("no schedule to render");
    return kNoResult;
  }
  char* csv = nullptr;
  char* svg = nullptr;
  if (auto s = msr_solution_gantt_csv(sol.get(), &csv); s != MSR_OK) return report(s);
  const std::string csv_text = take(csv);
  const std::string title = objective + "-first schedule";
  if (auto s = msr_solution_gantt_svg(sol.get(), title.c_str(), &svg); s != MSR_OK) return report(s);
  const std::string svg_text = take(svg);
  if (!write_file(fs::path(c.out) / "gantt.csv", csv_text) || !write_file(fs::path(c.out) / "gantt.svg", svg_text))
    return kInputError;
  return msr_solution_status(sol.get()) == MSR_OPTIMAL ? kOk : kNoResult;
}

int cmd_pareto(const Common& c, const FrontFlags& f, const std::vector<double>& weights, double v, bool timing) {
  if (weights.size() != 2) {
    log("--weights takes two values");
    return kInputError;
  }
  Instance inst;
  if (auto s = load(c, inst); s != MSR_OK) return report(s);
  const auto options = front_options(f, c.time_limit, worker_count());
  msr_front* raw_front = nullptr;
  if (auto s = msr_enumerate_front(inst.get(), &options, &raw_front); s != MSR_OK) return report(s);
  Front front(raw_front);
  const std::string diagnosis = msr_front_diagnosis(front.get());
  if (!diagnosis.empty()) log(diagnosis);

  char* text = nullptr;
  if (auto s = msr_front_csv(front.get(), timing ? 1 : 0, &text); s != MSR_OK) return report(s);
  if (!write_file(fs::path(c.out) / "front.csv", take(text))) return kInputError;
  const size_t size = msr_front_size(front.get());
  if (size == 0) return kNoResult;

  msr_ranking* raw_ranking = nullptr;
  if (auto s = msr_rank_front(front.get(), weights[0], weights[1], v, &raw_ranking); s != MSR_OK) return report(s);
  Ranking ranking(raw_ranking);
  if (msr_ranking_warnings(ranking.get(), &text) == MSR_OK) {
    std::istringstream lines(take(text));
    for (std::string line; std::getline(lines, line);) log("warning: " + line);
  }
  if (auto s = msr_ranking_csv(ranking.get(), &text); s != MSR_OK) return report(s);
  if (!write_file(fs::path(c.out) / "ranking.csv", take(text))) return kInputError;

  bool timed_out = false;
  for (size_t j = 0; j < size; ++j) {
    msr_point p;
    msr_front_point(front.get(), j, &p);
    timed_out = timed_out || p.status == MSR_TIMEOUT;
    msr_score score;
    msr_ranking_score(ranking.get(), j, &score);
    if (!score.in_compromise_set) continue;
    const std::string stem = "gantt_point" + std::to_string(j + 1);
    const std::string title = "Pareto point " + std::to_string(j + 1);
    if (auto s = msr_front_gantt_svg(front.get(), j, title.c_str(), &text); s != MSR_OK) return report(s);
    if (!write_file(fs::path(c.out) / (stem + ".svg"), take(text))) return kInputError;
    if (auto s = msr_front_gantt_csv(front.get(), j, &text); s != MSR_OK) return report(s);
    if (!write_file(fs::path(c.out) / (stem + ".csv"), take(text))) return kInputError;
  }
  if (auto s = msr_summary_table(front.get(), ranking.get(), &text); s != MSR_OK) return report(s);
  std::printf("%s", take(text).c_str());
  if (timed_out) log("some grid points timed out; the front may be partial");
  return timed_out ? kNoResult : kOk;
}

int cmd_sweep(const Common& c, const FrontFlags& f, const std::string& param, const std::vector<double>& multipliers) {
  Instance inst;
  if (auto s = load(c, inst); s != MSR_OK) return report(s);
  const auto options = front_options(f, c.time_limit, 1);
  const msr_rate rate = param == "retrieval" ? MSR_RATE_RETRIEVAL : MSR_RATE_DISRUPTION;
  msr_sweep* raw = nullptr;
  if (auto s = msr_sweep_run(inst.get(), rate, multipliers.data(), multipliers.size(), &options, worker_count(), &raw);
      s != MSR_OK)
    return report(s);
  Sweep sweep(raw);
  char* text = nullptr;
  if (auto s = msr_sweep_csv(sweep.get(), &text); s != MSR_OK) return report(s);
  const std::string csv = take(text);
  if (!write_file(fs::path(c.out) / ("sweep_" + param + ".csv"), csv)) return kInputError;
  int flagged = 0;
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  while (std::getline(lines, line))
    if (line.substr(line.rfind(',') + 1) != "ok") ++flagged;
  if (flagged > 0) log(std::to_string(flagged) + " sweep row(s) flagged; see the status column");
  return csv.find(",base_infeasible") == std::string::npos ? kOk : kNoResult;
}

struct SimFlags {
  std::optional<double> lambda, mu, upsilon, r;
  double horizon = 1e6;
  std::uint64_t seed = 1;
};

int cmd_simulate(const Common& c, const SimFlags& f) {
  std::vector<msr_queue_point> points;
  if (!c.instance.empty()) {
    Instance inst;
    if (auto s = load(c, inst); s != MSR_OK) return report(s);
    // Operating points come from the makespan-first schedule.
    msr_solution* raw = nullptr;
    if (auto s = msr_lexicographic(inst.get(), MSR_MAKESPAN, c.time_limit, &raw); s != MSR_OK) return report(s);
    Solution sol(raw);
    if (!msr_solution_has_schedule(sol.get())) {
      log("no schedule: cannot derive arrival rates");
      return kNoResult;
    }
    for (int k = 0; k < msr_instance_resource_count(inst.get()); ++k) {
      msr_queue_point p;
      msr_instance_queue(inst.get(), k, &p);
      p.lambda = msr_solution_arrival_rate(sol.get(), k);
      if (p.lambda > 0) points.push_back(p);
    }
  } else {
    if (!f.lambda || !f.mu || !f.upsilon || !f.r) {
      log("simulate needs --instance or all of --lambda --mu --upsilon --r");
      return kInputError;
    }
    points.push_back({*f.lambda, *f.mu, *f.upsilon, *f.r});
  }
  char* text = nullptr;
  double gap = 0.0;
  if (auto s = msr_simulation_csv(points.data(), points.size(), f.horizon, f.seed, &text, &gap); s != MSR_OK)
    return report(s);
  if (!write_file(fs::path(c.out) / "simulate.csv", take(text))) return kInputError;
  if (gap > 0.05) {
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "analytic and simulated W differ by up to %.1f%% (closed form vs preemptive-resume simulation)",
                  gap * 100);
    log(buf);
  }
  return kOk;
}

int cmd_adapt(const Common& c) {
  char* json = nullptr;
  if (auto s = msr_default_extension(c.instance.c_str(), nullptr, &json); s != MSR_OK) return report(s);
  const std::string stem = fs::path(c.instance).stem().string();
  return write_file(fs::path(c.out) / (stem + ".json"), take(json)) ? kOk : kInputError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact bi-objective scheduling of multi-skilled projects with unreliable resources"};
  app.require_subcommand(1);
  app.set_version_flag("--version", msr_version());

  Common common;
  FrontFlags front;
  std::string objective = "makespan";
  std::optional<double> budget;
  std::vector<double> weights{0.5, 0.5};
  double v = 0.5;
  bool timing = false;
  std::string param = "retrieval";
  std::vector<double> multipliers{1.4};
  SimFlags sim;

  auto* validate = app.add_subcommand("validate", "check an instance and its extension");
  add_instance_flags(validate, common, false);

  auto objective_flags = [&](CLI::App* cmd) {
    cmd->add_option("--objective", objective, "objective optimized first")
        ->check(CLI::IsMember({"makespan", "cost"}))
        ->capture_default_str();
    cmd->add_option("--budget", budget, "upper bound on the other objective");
    cmd->add_option("--time-limit", common.time_limit, "seconds per subproblem")->capture_default_str();
  };
  auto* solve = app.add_subcommand("solve", "lexicographic or budgeted single-objective solve");
  add_instance_flags(solve, common);
  objective_flags(solve);

  auto* gantt = app.add_subcommand("gantt", "render the Gantt chart of a solved schedule");
  add_instance_flags(gantt, common);
  objective_flags(gantt);

  auto* pareto = app.add_subcommand("pareto", "enumerate and rank the Pareto front");
  add_instance_flags(pareto, common);
  add_front_flags(pareto, front);
  pareto->add_option("--weights", weights, "VIKOR criterion weights: makespan,cost")->delimiter(',')->expected(2);
  pareto->add_option("--v", v, "VIKOR strategy weight")->check(CLI::Range(0.0, 1.0))->capture_default_str();
  pareto->add_option("--time-limit", common.time_limit, "seconds per subproblem")->capture_default_str();
  pareto->add_flag("--timing", timing, "record wall times in front.csv");

  auto* sweep = app.add_subcommand("sweep", "sensitivity of the front to reliability rates");
  add_instance_flags(sweep, common);
  add_front_flags(sweep, front);
  sweep->add_option("--param", param, "rate to scale")
      ->check(CLI::IsMember({"retrieval", "disruption"}))
      ->capture_default_str();
  sweep->add_option("--multipliers", multipliers, "comma-separated factors")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  sweep->add_option("--time-limit", common.time_limit, "seconds per subproblem")->capture_default_str();

  auto* simulate = app.add_subcommand("simulate", "compare the waiting-time formula with simulation");
  simulate->add_option("--instance", common.instance, "PSPLIB single-mode .sm file")->check(CLI::ExistingFile);
  simulate->add_option("--extension", common.extension, "JSON sidecar");
  simulate->add_flag("--default-extension", common.default_extension, "use the built-in adaptation");
  simulate->add_option("--out", common.out, "output directory")->capture_default_str();
  simulate->add_option("--lambda", sim.lambda, "arrival rate");
  simulate->add_option("--mu", sim.mu, "service rate");
  simulate->add_option("--upsilon", sim.upsilon, "disruption rate");
  simulate->add_option("--r", sim.r, "retrieval rate");
  simulate->add_option("--horizon", sim.horizon, "simulated time")->check(CLI::PositiveNumber)->capture_default_str();
  simulate->add_option("--seed", sim.seed, "random seed")->capture_default_str();
  simulate->add_option("--time-limit", common.time_limit, "seconds for the schedule solve")->capture_default_str();

  auto* adapt = app.add_subcommand("adapt", "write the built-in extension sidecar for a PSPLIB file");
  adapt->add_option("--instance", common.instance, "PSPLIB single-mode .sm file")->required()->check(CLI::ExistingFile);
  adapt->add_option("--out", common.out, "output directory")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  if (*validate) return cmd_validate(common);
  if (*solve) return cmd_solve(common, objective, budget);
  if (*gantt) return cmd_gantt(common, objective, budget);
  if (*pareto) return cmd_pareto(common, front, weights, v, timing);
  if (*sweep) return cmd_sweep(common, front, param, multipliers);
  if (*simulate) return cmd_simulate(common, sim);
  if (*adapt) return cmd_adapt(common);
  return kInputError;
}
