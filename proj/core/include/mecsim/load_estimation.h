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

#ifndef MECSIM_LOAD_ESTIMATION_H_
#define MECSIM_LOAD_ESTIMATION_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "mecsim/compute_model.h"
#include "mecsim/scenario.h"

namespace mecsim {

struct RateRequirement {
  // Server execution time assuming an equal 1/N share of the capacity.
  double t_exe_est_s = 0.0;
  // Upload rate at which offloading exactly matches the local run time.
  double min_rate_bps = 0.0;
};

// Empty when even an instantaneous upload cannot beat local execution
// (the UE is forced local).
std::optional<RateRequirement> min_rate_requirement(const Ue& ue,
                                                    double mec_capacity_hz,
                                                    std::size_t n_total);

// Interference-free rate of the UE spread over `prbs` PRBs, with the noise
// term scaled by the PRB count: prbs * (B/K) * log2(1 + P*H / (prbs*noise)).
double prb_demand_rate(int prbs, const Ue& ue, double serving_gain,
                       const RadioParams& radio);

// Smallest PRB count in [1, K] whose demand rate reaches min_rate_bps.
// Empty if K PRBs are not enough.
std::optional<int> min_prbs(const Ue& ue, double serving_gain,
                            const RadioParams& radio, double min_rate_bps);

enum class LoadStatus { kCandidate, kForcedLocal, kInfeasible };

struct LoadEstimate {
  std::size_t ue = 0;
  LoadStatus status = LoadStatus::kCandidate;
  // Minimum PRB demand; 0 unless status is kCandidate.
  int w = 0;
  double min_rate_bps = 0.0;
  double t_exe_est_s = 0.0;
  LocalOverhead local;

  bool candidate() const { return status == LoadStatus::kCandidate; }
};

LoadEstimate estimate_load(const Scenario& scenario, const ChannelGains& gains,
                           std::size_t n);
std::vector<LoadEstimate> estimate_loads(const Scenario& scenario,
                                         const ChannelGains& gains);

}  // namespace mecsim

#endif  // MECSIM_LOAD_ESTIMATION_H_
