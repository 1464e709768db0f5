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

#include "msrcpspr/sensitivity.hpp"

#include <cmath>
#include <stdexcept>

#include "parallel.hpp"

namespace msrcpspr {

const char* parameter_name(SweepParameter parameter) {
  return parameter == SweepParameter::Retrieval ? "retrieval" : "disruption";
}

SweepReport sensitivity_sweep(const ProjectInstance& instance, SweepParameter parameter,
                              const std::vector<double>& multipliers, const FrontOptions& options, int workers) {
  for (double m : multipliers)
    if (!(m > 0) || !std::isfinite(m)) throw std::invalid_argument("multipliers must be positive and finite");
  const auto rate =
      parameter == SweepParameter::Retrieval ? ProjectInstance::Rate::Retrieval : ProjectInstance::Rate::Disruption;

  SweepReport report;
  report.parameter = parameter;
  report.scenarios.resize(multipliers.size());
  FrontOptions sequential = options;
  sequential.threads = 1;
  // Slot 0 is the unscaled base front.
  internal::parallel_for(static_cast<int>(multipliers.size()) + 1, workers, [&](int slot) {
    if (slot == 0) {
      report.base = enumerate_front(instance, sequential);
      return;
    }
    auto& scenario = report.scenarios[slot - 1];
    scenario.multiplier = multipliers[slot - 1];
    scenario.front = enumerate_front(instance.with_scaled_rate(rate, scenario.multiplier), sequential);
  });
  return report;
}

}  // namespace msrcpspr
