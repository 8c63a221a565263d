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

#include "mecsim/load_estimation.h"

#include <cmath>

namespace mecsim {

std::optional<RateRequirement> min_rate_requirement(const Ue& ue,
                                                    double mec_capacity_hz,
                                                    std::size_t n_total) {
  RateRequirement req;
  req.t_exe_est_s =
      ue.task.cycles / (mec_capacity_hz / static_cast<double>(n_total));
  const double slack = ue.task.cycles / ue.local_speed_hz - req.t_exe_est_s;
  if (slack <= 0) return std::nullopt;
  req.min_rate_bps = ue.task.input_bits / slack;
  return req;
}

double prb_demand_rate(int prbs, const Ue& ue, double serving_gain,
                       const RadioParams& radio) {
  const double w = prbs;
  return w * radio.prb_bandwidth_hz() *
         std::log2(1.0 + ue.tx_power_w * serving_gain /
                             (w * radio.noise_per_prb_w));
}

std::optional<int> min_prbs(const Ue& ue, double serving_gain,
                            const RadioParams& radio, double min_rate_bps) {
  // The demand rate is strictly increasing in the PRB count, so bisect for
  // the first count that meets the requirement.
  int lo = 1;
  int hi = radio.num_prbs;
  if (prb_demand_rate(hi, ue, serving_gain, radio) < min_rate_bps) {
    return std::nullopt;
  }
  while (lo < hi) {
    const int mid = lo + (hi - lo) / 2;
    if (prb_demand_rate(mid, ue, serving_gain, radio) >= min_rate_bps) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

LoadEstimate estimate_load(const Scenario& scenario, const ChannelGains& gains,
                           std::size_t n) {
  const Ue& ue = scenario.ues[n];
  LoadEstimate est;
  est.ue = n;
  est.local = local_overhead(ue);
  const auto req =
      min_rate_requirement(ue, scenario.mec_capacity_hz, scenario.size());
  est.t_exe_est_s = ue.task.cycles /
                    (scenario.mec_capacity_hz / static_cast<double>(scenario.size()));
  if (!req) {
    est.status = LoadStatus::kForcedLocal;
    return est;
  }
  est.min_rate_bps = req->min_rate_bps;
  const auto w = min_prbs(ue, gains(n, n), scenario.radio, req->min_rate_bps);
  if (!w) {
    est.status = LoadStatus::kInfeasible;
    return est;
  }
  est.w = *w;
  return est;
}

std::vector<LoadEstimate> estimate_loads(const Scenario& scenario,
                                         const ChannelGains& gains) {
  std::vector<LoadEstimate> out;
  out.reserve(scenario.size());
  for (std::size_t n = 0; n < scenario.size(); ++n) {
    out.push_back(estimate_load(scenario, gains, n));
  }
  return out;
}

}  // namespace mecsim
