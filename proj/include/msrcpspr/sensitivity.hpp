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

#ifndef MSRCPSPR_SENSITIVITY_HPP_
#define MSRCPSPR_SENSITIVITY_HPP_

#include <vector>

#include "msrcpspr/front.hpp"
#include "msrcpspr/pareto.hpp"

namespace msrcpspr {

enum class SweepParameter { Retrieval, Disruption };

const char* parameter_name(SweepParameter parameter);

struct SweepScenario {
  double multiplier = 1.0;
  ParetoFront front;
};

struct SweepReport {
  SweepParameter parameter = SweepParameter::Retrieval;
  ParetoFront base;
  std::vector<SweepScenario> scenarios;  // in multiplier order
};

/// Re-enumerates the front with every resource's retrieval or disruption
/// rate multiplied by each factor. Scenarios run on up to `workers` threads;
/// each scenario itself is sequential.
SweepReport sensitivity_sweep(const ProjectInstance& instance, SweepParameter parameter,
                              const std::vector<double>& multipliers, const FrontOptions& options = {},
                              int workers = 1);

}  // namespace msrcpspr

#endif  // MSRCPSPR_SENSITIVITY_HPP_
