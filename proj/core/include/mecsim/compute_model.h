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

#ifndef MECSIM_COMPUTE_MODEL_H_
#define MECSIM_COMPUTE_MODEL_H_

#include "mecsim/scenario.h"

namespace mecsim {

// Weighted time/energy cost. Seconds and joules are mixed without
// normalization; +inf marks an infeasible candidate.
double weighted_overhead(const Ue& ue, double time_s, double energy_j);

struct LocalOverhead {
  double time_s = 0.0;
  double energy_j = 0.0;
  double overhead = 0.0;
};

struct OffloadOverhead {
  double rate_bps = 0.0;
  double t_off_s = 0.0;
  double e_off_j = 0.0;
  double t_exe_s = 0.0;
  double t_total_s = 0.0;
  double overhead = 0.0;
};

LocalOverhead local_overhead(const Ue& ue);

// Upload at rate_bps, then execute on f_assigned_hz of server capacity.
// Throws ZeroRate if rate_bps <= 0.
OffloadOverhead offload_overhead(const Ue& ue, double rate_bps,
                                 double f_assigned_hz);

}  // namespace mecsim

#endif  // MECSIM_COMPUTE_MODEL_H_
