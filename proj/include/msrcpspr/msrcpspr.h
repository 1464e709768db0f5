/* Copyright 2026 The msrcpspr Authors
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. */

/* C interface to the msrcpspr library. Every function that can fail returns
 * an msr_status; on failure msr_last_error() describes the problem (thread
 * local, valid until the next failing call on the same thread). Strings
 * returned through char** are heap allocated and must be released with
 * msr_string_free. Handles are released with their *_free function. */
#ifndef MSRCPSPR_MSRCPSPR_H_
#define MSRCPSPR_MSRCPSPR_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define MSR_API __declspec(dllexport)
#else
#define MSR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum msr_status {
  MSR_OK = 0,
  MSR_ERR_PARSE = -1,
  MSR_ERR_VALIDATION = -2,
  MSR_ERR_IO = -3,
  MSR_ERR_INSTABILITY = -4,
  MSR_ERR_INVALID_ARGUMENT = -5,
  MSR_ERR_INFEASIBLE = -6,
  MSR_ERR_INTERNAL = -7
} msr_status;

typedef enum msr_objective { MSR_MAKESPAN = 0, MSR_COST = 1 } msr_objective;

typedef enum msr_solve_status { MSR_OPTIMAL = 0, MSR_INFEASIBLE = 1, MSR_TIMEOUT = 2 } msr_solve_status;

typedef enum msr_rate { MSR_RATE_DISRUPTION = 0, MSR_RATE_RETRIEVAL = 1, MSR_RATE_SERVICE = 2 } msr_rate;

typedef struct msr_instance msr_instance;
typedef struct msr_solution msr_solution;
typedef struct msr_front msr_front;
typedef struct msr_ranking msr_ranking;
typedef struct msr_sweep msr_sweep;

MSR_API const char* msr_version(void);
MSR_API const char* msr_last_error(void);
MSR_API void msr_string_free(char* text);

/* ---- instances ---- */

typedef struct msr_adaptation {
  int resource_count;     /* default 4 */
  int skill_count;        /* default 4 */
  int request_cap;        /* default 2 */
  double disruption_rate; /* default 0.5 */
  double retrieval_rate;  /* default 0.5 */
  double service_rate;    /* <= 0 selects 3 * executable activities */
  uint32_t cost_seed;     /* default 2024 */
} msr_adaptation;

MSR_API void msr_adaptation_init(msr_adaptation* options);

/* PSPLIB file plus JSON extension sidecar. */
MSR_API msr_status msr_instance_load(const char* psplib_path, const char* extension_path, msr_instance** out);
/* PSPLIB file with the built-in adaptation; options may be NULL. */
MSR_API msr_status msr_instance_load_default(const char* psplib_path, const msr_adaptation* options,
                                             msr_instance** out);
MSR_API msr_status msr_instance_from_text(const char* psplib_text, const char* extension_json, msr_instance** out);
/* The sidecar the built-in adaptation would use for a PSPLIB file. */
MSR_API msr_status msr_default_extension(const char* psplib_path, const msr_adaptation* options, char** json);
MSR_API void msr_instance_free(msr_instance* instance);

MSR_API int msr_instance_activity_count(const msr_instance* instance);
MSR_API int msr_instance_resource_count(const msr_instance* instance);
MSR_API int msr_instance_skill_count(const msr_instance* instance);
MSR_API const char* msr_instance_name(const msr_instance* instance);
/* Load-time infeasibility warnings, one per line (empty when none). */
MSR_API msr_status msr_instance_warnings(const msr_instance* instance, char** text);
/* Invariant violations, one per line; *count receives their number. */
MSR_API msr_status msr_instance_validate(const msr_instance* instance, char** report, int* count);
MSR_API msr_status msr_instance_scale_rate(const msr_instance* instance, msr_rate rate, double factor,
                                           msr_instance** out);

/* ---- queue ---- */

typedef struct msr_queue_point {
  double lambda;
  double mu;
  double upsilon;
  double r;
} msr_queue_point;

typedef struct msr_sim_estimate {
  double mean_wait;
  double half_width;
  uint64_t samples;
} msr_sim_estimate;

MSR_API double msr_critical_rate(double mu, double upsilon, double r);
/* MSR_ERR_INSTABILITY at or above the critical rate. */
MSR_API msr_status msr_waiting_time(const msr_queue_point* point, double* wait);
MSR_API msr_status msr_simulate(const msr_queue_point* point, double horizon, uint64_t seed, msr_sim_estimate* out);
/* Runs every point (seed + index) and writes the simulation CSV; *max_gap
 * (may be NULL) receives the largest relative analytic/simulated gap. */
MSR_API msr_status msr_simulation_csv(const msr_queue_point* points, size_t count, double horizon, uint64_t seed,
                                      char** csv, double* max_gap);
/* Reliability parameters of resource k (0-based) with lambda set to 0. */
MSR_API msr_status msr_instance_queue(const msr_instance* instance, int resource, msr_queue_point* out);

/* ---- single-objective solves ---- */

typedef struct msr_solve_options {
  msr_objective primary;
  int has_budget;
  double budget;      /* bound on the other objective */
  int augmented;      /* reward budget slack */
  double eps;         /* default 1e-4 */
  double range;       /* default 1 */
  double time_limit;  /* seconds, default 300 */
  uint64_t node_limit; /* 0 = unlimited */
} msr_solve_options;

MSR_API void msr_solve_options_init(msr_solve_options* options);
/* MSR_OK whenever the search ran; inspect msr_solution_status. */
MSR_API msr_status msr_solve(const msr_instance* instance, const msr_solve_options* options, msr_solution** out);
MSR_API msr_status msr_lexicographic(const msr_instance* instance, msr_objective first, double time_limit,
                                     msr_solution** out);
MSR_API void msr_solution_free(msr_solution* solution);

MSR_API msr_solve_status msr_solution_status(const msr_solution* solution);
MSR_API int msr_solution_has_schedule(const msr_solution* solution);
MSR_API double msr_solution_makespan(const msr_solution* solution);
MSR_API double msr_solution_cost(const msr_solution* solution);
MSR_API double msr_solution_slack(const msr_solution* solution);
MSR_API uint64_t msr_solution_nodes(const msr_solution* solution);
MSR_API double msr_solution_wall_time(const msr_solution* solution);
/* Arrival rate lambda_k of the schedule (0 without a schedule). */
MSR_API double msr_solution_arrival_rate(const msr_solution* solution, int resource);
MSR_API msr_status msr_solution_violations(const msr_solution* solution, char** report, int* count);
MSR_API msr_status msr_solution_gantt_csv(const msr_solution* solution, char** csv);
MSR_API msr_status msr_solution_gantt_svg(const msr_solution* solution, const char* title, char** svg);

/* ---- Pareto fronts ---- */

typedef struct msr_front_options {
  int grid_count;     /* default 10 */
  double eps;         /* default 1e-4 */
  int augmented;      /* 0: plain epsilon-constraint sweep */
  int bypass;         /* default 1 */
  int threads;        /* grid workers when bypass is off, default 1 */
  double time_limit;  /* seconds per subproblem, default 300 */
  uint64_t node_limit;
} msr_front_options;

typedef struct msr_point {
  double makespan;
  double cost;
  double slack;
  int grid_index;
  msr_solve_status status;
  double wall_time;
} msr_point;

typedef struct msr_payoff {
  double makespan_first[2]; /* (makespan, cost) */
  double cost_first[2];
  double pis[2];
  double nis[2];
} msr_payoff;

MSR_API void msr_front_options_init(msr_front_options* options);
MSR_API msr_status msr_enumerate_front(const msr_instance* instance, const msr_front_options* options,
                                       msr_front** out);
MSR_API msr_status msr_brute_force_front(const msr_instance* instance, msr_front** out);
MSR_API void msr_front_free(msr_front* front);

MSR_API size_t msr_front_size(const msr_front* front);
MSR_API msr_status msr_front_point(const msr_front* front, size_t index, msr_point* out);
MSR_API msr_status msr_front_payoff(const msr_front* front, msr_payoff* out);
MSR_API const char* msr_front_diagnosis(const msr_front* front);
MSR_API msr_status msr_front_csv(const msr_front* front, int timing, char** csv);
MSR_API msr_status msr_front_gantt_csv(const msr_front* front, size_t index, char** csv);
MSR_API msr_status msr_front_gantt_svg(const msr_front* front, size_t index, const char* title, char** svg);

/* ---- VIKOR ---- */

typedef struct msr_score {
  double S;
  double R;
  double Q;
  int rank;
  int in_compromise_set;
} msr_score;

MSR_API msr_status msr_rank_front(const msr_front* front, double weight_makespan, double weight_cost, double v,
                                  msr_ranking** out);
MSR_API msr_status msr_rank_values(const double* makespans, const double* costs, size_t count,
                                   double weight_makespan, double weight_cost, double v, msr_ranking** out);
MSR_API void msr_ranking_free(msr_ranking* ranking);
MSR_API size_t msr_ranking_size(const msr_ranking* ranking);
MSR_API msr_status msr_ranking_score(const msr_ranking* ranking, size_t index, msr_score* out);
/* Index of the alternative at 0-based rank position. */
MSR_API msr_status msr_ranking_at(const msr_ranking* ranking, size_t position, size_t* index);
MSR_API msr_status msr_ranking_warnings(const msr_ranking* ranking, char** text);
MSR_API msr_status msr_ranking_csv(const msr_ranking* ranking, char** csv);
/* Text table of the front annotated with the ranking. */
MSR_API msr_status msr_summary_table(const msr_front* front, const msr_ranking* ranking, char** text);

/* ---- sensitivity sweeps ---- */

MSR_API msr_status msr_sweep_run(const msr_instance* instance, msr_rate rate, const double* multipliers,
                                 size_t count, const msr_front_options* options, int workers, msr_sweep** out);
MSR_API void msr_sweep_free(msr_sweep* sweep);
MSR_API msr_status msr_sweep_csv(const msr_sweep* sweep, char** csv);

#ifdef __cplusplus
}
#endif

#endif /* MSRCPSPR_MSRCPSPR_H_ */
