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

/* Compiled as C to keep the public header free of C++ constructs. */
#include "msrcpspr/msrcpspr.h"

int c_header_solve_toy(const char* sm, const char* json, double* makespan) {
  msr_instance* inst = NULL;
  msr_solution* sol = NULL;
  msr_solve_options opt;
  msr_status st = msr_instance_load(sm, json, &inst);
  if (st != MSR_OK) return st;
  msr_solve_options_init(&opt);
  st = msr_solve(inst, &opt, &sol);
  if (st == MSR_OK) *makespan = msr_solution_makespan(sol);
  msr_solution_free(sol);
  msr_instance_free(inst);
  return st;
}
