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

#include "mecsim/scenario.h"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "mecsim/error.h"

namespace mecsim {
namespace {

// mt19937_64 is fully specified by the standard; the distributions are not,
// so the conversions to real values are done here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, 1).
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Box-Muller; the second variate is discarded.
  double normal() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  std::mt19937_64 engine_;
};

constexpr std::uint64_t kShadowingStream = 0x9e3779b97f4a7c15ULL;

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidConfig(what);
}

}  // namespace

double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

double dbm_to_watt(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

void ScenarioConfig::validate() const {
  require(n_cells >= 1, "n_cells must be >= 1");
  require(area_m > 0, "area_m must be positive");
  require(ue_radius_m > 0, "ue_radius_m must be positive");
  require(min_distance_m > 0 && min_distance_m <= ue_radius_m,
          "min_distance_m must be in (0, ue_radius_m]");
  require(bandwidth_hz > 0, "bandwidth_hz must be positive");
  require(num_prbs >= 1, "num_prbs must be >= 1");
  require(std::isfinite(noise_dbm), "noise_dbm must be finite");
  require(tx_power_mw > 0, "tx_power_mw must be positive");
  require(input_kb > 0, "input_kb must be positive");
  require(bytes_per_kb > 0, "bytes_per_kb must be positive");
  require(task_megacycles > 0, "task_megacycles must be positive");
  require(local_ghz > 0, "local_ghz must be positive");
  require(mec_ghz > 0, "mec_ghz must be positive");
  require(gamma_t >= 0 && gamma_t <= 1, "gamma_t must be in [0, 1]");
  require(gamma_e >= 0 && gamma_e <= 1, "gamma_e must be in [0, 1]");
  require(energy_coeff_j_per_cycle >= 0,
          "energy_coeff_j_per_cycle must be non-negative");
  require(reuse_lambda >= 1, "reuse_lambda must be >= 1");
  require(edge_threshold > 0, "edge_threshold must be positive");
  require(std::isfinite(pl0_db), "pl0_db must be finite");
  require(pl_exponent > 0, "pl_exponent must be positive");
  require(shadowing_db >= 0, "shadowing_db must be non-negative");
}

std::vector<double> Scenario::tx_powers() const {
  std::vector<double> powers;
  powers.reserve(ues.size());
  for (const Ue& ue : ues) powers.push_back(ue.tx_power_w);
  return powers;
}

void Scenario::validate() const {
  require(!cells.empty(), "scenario has no cells");
  require(cells.size() == ues.size(), "one UE per cell required");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    require(cells[i].id == i && ues[i].id == i, "ids must be 0..N-1");
    const Ue& ue = ues[i];
    require(ue.tx_power_w > 0, "tx power must be positive");
    require(ue.task.input_bits > 0 && ue.task.cycles > 0,
            "task sizes must be positive");
    require(ue.local_speed_hz > 0, "local speed must be positive");
    require(ue.weight_time >= 0 && ue.weight_time <= 1 &&
                ue.weight_energy >= 0 && ue.weight_energy <= 1,
            "weights must be in [0, 1]");
    require(ue.energy_coeff_j_per_cycle > 0, "energy coefficient must be positive");
  }
  require(radio.bandwidth_hz > 0 && radio.num_prbs >= 1 &&
              radio.noise_per_prb_w > 0,
          "invalid radio parameters");
  require(mec_capacity_hz > 0, "MEC capacity must be positive");
  require(reuse_lambda >= 1, "reuse lambda must be >= 1");
  require(edge_threshold > 0, "edge threshold must be positive");
}

Scenario build_scenario(const ScenarioConfig& config, std::uint64_t seed) {
  config.validate();
  Rng rng(seed);
  const auto n = static_cast<std::size_t>(config.n_cells);

  Scenario s;
  s.seed = seed;
  s.area_m = config.area_m;
  s.radio.bandwidth_hz = config.bandwidth_hz;
  s.radio.num_prbs = config.num_prbs;
  s.radio.noise_per_prb_w = dbm_to_watt(config.noise_dbm);
  s.mec_capacity_hz = config.mec_ghz * 1e9;
  s.reuse_lambda = config.reuse_lambda;
  s.edge_threshold = config.edge_threshold;
  s.path_loss = {config.pl0_db, config.pl_exponent, config.shadowing_db};

  s.cells.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = rng.uniform(0.0, config.area_m);
    const double y = rng.uniform(0.0, config.area_m);
    s.cells.push_back({i, {x, y}});
  }

  const double local_hz = config.local_ghz * 1e9;
  const double energy_coeff =
      config.energy_coeff_j_per_cycle > 0
          ? config.energy_coeff_j_per_cycle
          : 1e-11 * config.local_ghz * config.local_ghz;
  const double r_min2 = config.min_distance_m * config.min_distance_m;
  const double r_max2 = config.ue_radius_m * config.ue_radius_m;

  s.ues.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    // Area-uniform radius over the annulus.
    const double r = std::sqrt(r_min2 + rng.uniform() * (r_max2 - r_min2));
    const double phi = 2.0 * std::numbers::pi * rng.uniform();
    Ue ue;
    ue.id = i;
    ue.position = {s.cells[i].position.x + r * std::cos(phi),
                   s.cells[i].position.y + r * std::sin(phi)};
    ue.tx_power_w = config.tx_power_mw * 1e-3;
    ue.task.input_bits = config.input_kb * config.bytes_per_kb * 8.0;
    ue.task.cycles = config.task_megacycles * 1e6;
    ue.local_speed_hz = local_hz;
    ue.weight_time = config.gamma_t;
    ue.weight_energy = config.gamma_e;
    ue.energy_coeff_j_per_cycle = energy_coeff;
    s.ues.push_back(ue);
  }
  return s;
}

double path_loss_db(double distance_m, const PathLossParams& params) {
  const double d = std::max(distance_m, 1.0);
  return params.pl0_db + 10.0 * params.exponent * std::log10(d);
}

ChannelGains channel_gains(const Scenario& scenario) {
  scenario.validate();
  const std::size_t n = scenario.size();
  ChannelGains gains(n, n);
  Rng shadowing(scenario.seed ^ kShadowingStream);
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t k = 0; k < n; ++k) {
      double loss_db = path_loss_db(
          distance(scenario.ues[m].position, scenario.cells[k].position),
          scenario.path_loss);
      if (scenario.path_loss.shadowing_db > 0) {
        loss_db += scenario.path_loss.shadowing_db * shadowing.normal();
      }
      gains(m, k) = std::pow(10.0, -loss_db / 10.0);
    }
  }
  return gains;
}

}  // namespace mecsim
