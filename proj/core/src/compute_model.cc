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

#include "mecsim/compute_model.h"

#include <stdexcept>

#include "mecsim/error.h"

namespace mecsim {

double weighted_overhead(const Ue& ue, double time_s, double energy_j) {
  return ue.weight_time * time_s + ue.weight_energy * energy_j;
}

LocalOverhead local_overhead(const Ue& ue) {
  LocalOverhead out;
  out.time_s = ue.task.cycles / ue.local_speed_hz;
  out.energy_j = ue.energy_coeff_j_per_cycle * ue.task.cycles;
  out.overhead = weighted_overhead(ue, out.time_s, out.energy_j);
  return out;
}

OffloadOverhead offload_overhead(const Ue& ue, double rate_bps,
                                 double f_assigned_hz) {
  if (!(rate_bps > 0)) throw ZeroRate("offload rate must be positive");
  if (!(f_assigned_hz > 0)) {
    throw std::invalid_argument("assigned server capacity must be positive");
  }
  OffloadOverhead out;
  out.rate_bps = rate_bps;
  out.t_off_s = ue.task.input_bits / rate_bps;
  out.e_off_j = ue.tx_power_w * ue.task.input_bits / rate_bps;
  out.t_exe_s = ue.task.cycles / f_assigned_hz;
  out.t_total_s = out.t_off_s + out.t_exe_s;
  out.overhead = weighted_overhead(ue, out.t_total_s, out.e_off_j);
  return out;
}

}  // namespace mecsim
