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

#ifndef MSRCPSPR_PARETO_HPP_
#define MSRCPSPR_PARETO_HPP_

#include "msrcpspr/front.hpp"
#include "msrcpspr/instance.hpp"
#include "msrcpspr/solver.hpp"

namespace msrcpspr {

struct FrontOptions {
  int grid_count = 10;
  double eps = 1e-4;
  /// false runs a plain epsilon-constraint sweep: no slack reward, no bypass.
  bool augmented = true;
  bool bypass = true;
  /// Grid points solved concurrently; only honoured when bypass is off.
  int threads = 1;
  SolveLimits limits;
};

/// Cost is gridded over [cost PIS, cost NIS] in grid_count steps from the
/// NIS end; makespan is minimized at every level with the augmented slack
/// reward. Points keep the grid index that produced them.
ParetoFront enumerate_front(const Solver& solver, const FrontOptions& options = {});
ParetoFront enumerate_front(const ProjectInstance& instance, const FrontOptions& options = {});

/// Worker count from MSRCPSPR_THREADS (at least 1), else `fallback`.
int thread_limit(int fallback = 1);

}  // namespace msrcpspr

#endif  // MSRCPSPR_PARETO_HPP_
