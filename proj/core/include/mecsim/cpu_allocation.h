// Copyright 2026 The mecsim Authors
//
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

#ifndef MECSIM_CPU_ALLOCATION_H_
#define MECSIM_CPU_ALLOCATION_H_

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace mecsim {

struct CpuRequest {
  std::size_t ue = 0;
  double cycles = 0.0;
  // Latest acceptable execution time; +inf for no cap.
  double t_cap_s = 0.0;

  // Smallest capacity meeting the cap.
  double lower_bound_hz() const { return cycles / t_cap_s; }
};

struct CpuAllocation {
  // f[i] is the capacity given to requests[i].
  std::vector<double> f;
  double objective = 0.0;
};

enum class CpuObjective {
  kMinMax,  // minimize the largest execution time
  kMinSum,  // minimize the total execution time
  kEqualSplit,
};

std::string_view objective_name(CpuObjective objective);

bool feasible(std::span<const CpuRequest> requests, double capacity_hz);

// Water-filling on the common execution time: every uncapped request
// finishes at the same time, capped ones get exactly their lower bound.
CpuAllocation allocate_minmax(std::span<const CpuRequest> requests,
                              double capacity_hz);

// KKT solution f_n = max(L_n, sqrt(D_n) / nu), nu set by the budget.
CpuAllocation allocate_minsum(std::span<const CpuRequest> requests,
                              double capacity_hz);

// capacity / |requests| each; throws InfeasibleAllocation if a cap is missed.
// The objective is the summed execution time.
CpuAllocation allocate_equal(std::span<const CpuRequest> requests,
                             double capacity_hz);

CpuAllocation allocate(CpuObjective objective,
                       std::span<const CpuRequest> requests,
                       double capacity_hz);

double max_exec_time(std::span<const CpuRequest> requests,
                     std::span<const double> f);
double sum_exec_time(std::span<const CpuRequest> requests,
                     std::span<const double> f);

}  // namespace mecsim

#endif  // MECSIM_CPU_ALLOCATION_H_
