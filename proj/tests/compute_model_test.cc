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

#include <gtest/gtest.h>

#include "mecsim/error.h"

namespace mecsim {
namespace {

Ue reference_ue() {
  Ue ue;
  ue.tx_power_w = 0.1;
  ue.task = {3'440'640.0, 1e9};
  ue.local_speed_hz = 0.7e9;
  ue.weight_time = 0.5;
  ue.weight_energy = 0.5;
  ue.energy_coeff_j_per_cycle = 4.9e-12;
  return ue;
}

TEST(LocalOverheadTest, ReferenceUe) {
  const LocalOverhead z = local_overhead(reference_ue());
  EXPECT_NEAR(z.time_s, 1.4285714285714286, 1e-15);
  EXPECT_NEAR(z.energy_j, 4.9e-3, 1e-17);
  EXPECT_NEAR(z.overhead, 0.71673571428571428571, 1e-15);
}

TEST(LocalOverheadTest, TimeOnlyWeights) {
  Ue ue = reference_ue();
  ue.weight_time = 1.0;
  ue.weight_energy = 0.0;
  const LocalOverhead z = local_overhead(ue);
  EXPECT_EQ(z.overhead, z.time_s);
}

TEST(OffloadOverheadTest, OneSecondUpload) {
  const Ue ue = reference_ue();
  const OffloadOverhead z = offload_overhead(ue, 3'440'640.0, 1e9);
  EXPECT_DOUBLE_EQ(z.t_off_s, 1.0);
  EXPECT_DOUBLE_EQ(z.e_off_j, 0.1);
  EXPECT_DOUBLE_EQ(z.t_exe_s, 1.0);
  EXPECT_DOUBLE_EQ(z.t_total_s, 2.0);
  EXPECT_DOUBLE_EQ(z.overhead, 0.5 * 2.0 + 0.5 * 0.1);
}

TEST(OffloadOverheadTest, DoublingRateHalvesUploadCosts) {
  const Ue ue = reference_ue();
  const OffloadOverhead slow = offload_overhead(ue, 2e6, 10e9);
  const OffloadOverhead fast = offload_overhead(ue, 4e6, 10e9);
  EXPECT_DOUBLE_EQ(fast.t_off_s, slow.t_off_s / 2);
  EXPECT_DOUBLE_EQ(fast.e_off_j, slow.e_off_j / 2);
  EXPECT_LT(fast.overhead, slow.overhead);
  EXPECT_LT(offload_overhead(ue, 2e6, 20e9).overhead, slow.overhead);
}

TEST(OffloadOverheadTest, WeightLinearity) {
  Ue ue = reference_ue();
  ue.weight_time = 1.0;
  ue.weight_energy = 0.0;
  const double time_only = offload_overhead(ue, 5e6, 11e9).overhead;
  ue.weight_time = 0.0;
  ue.weight_energy = 1.0;
  const double energy_only = offload_overhead(ue, 5e6, 11e9).overhead;
  ue.weight_time = 0.3;
  ue.weight_energy = 0.6;
  EXPECT_NEAR(offload_overhead(ue, 5e6, 11e9).overhead,
              0.3 * time_only + 0.6 * energy_only, 1e-15);
}

TEST(OffloadOverheadTest, ZeroRateThrows) {
  EXPECT_THROW(offload_overhead(reference_ue(), 0.0, 1e9), ZeroRate);
  EXPECT_THROW(offload_overhead(reference_ue(), -1.0, 1e9), ZeroRate);
}

}  // namespace
}  // namespace mecsim
