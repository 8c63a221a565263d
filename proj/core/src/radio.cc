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

#include "mecsim/radio.h"

#include <cmath>
#include <numeric>
#include <string>

#include "mecsim/error.h"

namespace mecsim {

OffloadDecision::OffloadDecision(const std::vector<int>& flags) {
  flags_.reserve(flags.size());
  for (int f : flags) flags_.push_back(f != 0 ? 1 : 0);
}

std::size_t OffloadDecision::num_offloading() const {
  std::size_t count = 0;
  for (auto f : flags_) count += f;
  return count;
}

std::vector<std::size_t> OffloadDecision::offload_set() const {
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n < flags_.size(); ++n) {
    if (flags_[n] != 0) out.push_back(n);
  }
  return out;
}

std::vector<std::size_t> OffloadDecision::local_set() const {
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n < flags_.size(); ++n) {
    if (flags_[n] == 0) out.push_back(n);
  }
  return out;
}

void PrbAssociation::assign(std::size_t n, int k) {
  auto& cell = table_(n, static_cast<std::size_t>(k));
  if (cell == 0) {
    cell = 1;
    ++counts_[n];
  }
}

int PrbAssociation::total() const {
  return std::accumulate(counts_.begin(), counts_.end(), 0);
}

std::vector<int> PrbAssociation::prbs_of(std::size_t n) const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(counts_[n]));
  for (int k = 0; k < num_prbs(); ++k) {
    if (holds(n, k)) out.push_back(k);
  }
  return out;
}

double prb_rate(const RadioParams& radio, double signal_w, double interference_w) {
  return radio.prb_bandwidth_hz() *
         std::log2(1.0 + signal_w / (radio.noise_per_prb_w + interference_w));
}

double uplink_rate(std::size_t n, const OffloadDecision& decision,
                   const PrbAssociation& prbs, const ChannelGains& gains,
                   const RadioParams& radio, std::span<const double> powers) {
  const std::size_t cells = decision.size();
  for (std::size_t m = 0; m < cells; ++m) {
    const bool holds_any = prbs.count(m) > 0;
    if (holds_any != decision.offloads(m)) {
      throw InconsistentTables("cell " + std::to_string(m) +
                               (holds_any ? " holds PRBs but computes locally"
                                          : " offloads without PRBs"));
    }
  }
  if (!decision.offloads(n)) return 0.0;

  const double signal = powers[n] / prbs.count(n) * gains(n, n);
  double rate = 0.0;
  for (int k = 0; k < prbs.num_prbs(); ++k) {
    if (!prbs.holds(n, k)) continue;
    double interference = 0.0;
    for (std::size_t m = 0; m < cells; ++m) {
      if (m == n || !decision.offloads(m) || !prbs.holds(m, k)) continue;
      interference += powers[m] / prbs.count(m) * gains(m, n);
    }
    rate += prb_rate(radio, signal, interference);
  }
  return rate;
}

InterferenceTable interference_table(const PrbAssociation& prbs,
                                     const ChannelGains& gains,
                                     std::span<const double> powers) {
  const std::size_t cells = prbs.num_cells();
  const int k_total = prbs.num_prbs();
  InterferenceTable table(cells, static_cast<std::size_t>(k_total), 0.0);
  for (std::size_t m = 0; m < cells; ++m) {
    if (prbs.count(m) == 0) continue;
    const double per_prb = powers[m] / prbs.count(m);
    for (int k = 0; k < k_total; ++k) {
      if (!prbs.holds(m, k)) continue;
      for (std::size_t n = 0; n < cells; ++n) {
        if (n != m) table(n, static_cast<std::size_t>(k)) += per_prb * gains(m, n);
      }
    }
  }
  return table;
}

}  // namespace mecsim
