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

#ifndef MECSIM_SCENARIO_H_
#define MECSIM_SCENARIO_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mecsim/matrix.h"

namespace mecsim {

struct Point {
  double x = 0.0;
  double y = 0.0;

  bool operator==(const Point&) const = default;
};

double distance(Point a, Point b);

// Converts a power level in dBm to Watt.
double dbm_to_watt(double dbm);

struct RadioParams {
  double bandwidth_hz = 0.0;
  int num_prbs = 0;
  // Noise power over the bandwidth of a single PRB.
  double noise_per_prb_w = 0.0;

  double prb_bandwidth_hz() const { return bandwidth_hz / num_prbs; }

  bool operator==(const RadioParams&) const = default;
};

struct Task {
  double input_bits = 0.0;
  double cycles = 0.0;

  bool operator==(const Task&) const = default;
};

struct Ue {
  std::size_t id = 0;
  Point position;
  double tx_power_w = 0.0;
  Task task;
  double local_speed_hz = 0.0;
  double weight_time = 0.0;
  double weight_energy = 0.0;
  double energy_coeff_j_per_cycle = 0.0;

  bool operator==(const Ue&) const = default;
};

struct SmallCell {
  std::size_t id = 0;
  Point position;

  bool operator==(const SmallCell&) const = default;
};

// Log-distance path loss with optional log-normal shadowing.
struct PathLossParams {
  double pl0_db = 30.0;
  double exponent = 3.7;
  double shadowing_db = 0.0;

  bool operator==(const PathLossParams&) const = default;
};

// Flat configuration record. Defaults follow the reference deployment:
// 20 MHz, 100 mW UEs, -100 dBm noise, 420 KB / 1000 Mcycle tasks,
// 0.7 GHz handsets and a 100 GHz edge server.
struct ScenarioConfig {
  int n_cells = 9;
  double area_m = 120.0;
  double ue_radius_m = 20.0;
  double min_distance_m = 1.0;
  double bandwidth_hz = 20e6;
  int num_prbs = 100;
  double noise_dbm = -100.0;
  double tx_power_mw = 100.0;
  double input_kb = 420.0;
  double bytes_per_kb = 1024.0;
  double task_megacycles = 1000.0;
  double local_ghz = 0.7;
  double mec_ghz = 100.0;
  double gamma_t = 0.5;
  double gamma_e = 0.5;
  // Energy per CPU cycle in J. Zero selects 1e-11 * (local_ghz)^2.
  double energy_coeff_j_per_cycle = 0.0;
  double reuse_lambda = 2.0;
  double edge_threshold = 0.1;
  double pl0_db = 30.0;
  double pl_exponent = 3.7;
  double shadowing_db = 0.0;
  std::uint64_t seed = 1;

  // Throws InvalidConfig on the first out-of-range field.
  void validate() const;

  bool operator==(const ScenarioConfig&) const = default;
};

struct Scenario {
  std::vector<SmallCell> cells;
  // ues[i] is served by cells[i].
  std::vector<Ue> ues;
  RadioParams radio;
  double mec_capacity_hz = 0.0;
  double reuse_lambda = 1.0;
  double edge_threshold = 0.1;
  std::uint64_t seed = 0;
  double area_m = 0.0;
  PathLossParams path_loss;

  std::size_t size() const { return ues.size(); }
  std::vector<double> tx_powers() const;

  void validate() const;

  bool operator==(const Scenario&) const = default;
};

// h(m, n) is the linear power gain from UE m to SeNB n.
using ChannelGains = Matrix<double>;

// Cells uniform in the square area; each UE uniform over the annulus
// [min_distance_m, ue_radius_m] around its cell. Same (config, seed) gives
// the same Scenario.
Scenario build_scenario(const ScenarioConfig& config, std::uint64_t seed);

double path_loss_db(double distance_m, const PathLossParams& params);

ChannelGains channel_gains(const Scenario& scenario);

}  // namespace mecsim

#endif  // MECSIM_SCENARIO_H_
