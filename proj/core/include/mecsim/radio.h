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

#ifndef MECSIM_RADIO_H_
#define MECSIM_RADIO_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mecsim/matrix.h"
#include "mecsim/scenario.h"

namespace mecsim {

// Binary offloading flags; a UE either ships its task to the edge server
// (offloads) or computes locally.
class OffloadDecision {
 public:
  OffloadDecision() = default;
  explicit OffloadDecision(std::size_t n, bool offload = false)
      : flags_(n, offload ? 1 : 0) {}
  explicit OffloadDecision(const std::vector<int>& flags);

  std::size_t size() const { return flags_.size(); }
  bool offloads(std::size_t n) const { return flags_[n] != 0; }
  void set(std::size_t n, bool offload) { flags_[n] = offload ? 1 : 0; }

  std::size_t num_offloading() const;
  bool all_offloading() const { return num_offloading() == size(); }

  // Ascending UE indices.
  std::vector<std::size_t> offload_set() const;
  std::vector<std::size_t> local_set() const;

  bool operator==(const OffloadDecision&) const = default;

 private:
  std::vector<std::uint8_t> flags_;
};

// Binary N x K table: holds(n, k) iff SeNB n uses PRB k.
class PrbAssociation {
 public:
  PrbAssociation() = default;
  PrbAssociation(std::size_t num_cells, int num_prbs)
      : table_(num_cells, static_cast<std::size_t>(num_prbs), 0),
        counts_(num_cells, 0) {}

  std::size_t num_cells() const { return table_.rows(); }
  int num_prbs() const { return static_cast<int>(table_.cols()); }

  bool holds(std::size_t n, int k) const {
    return table_(n, static_cast<std::size_t>(k)) != 0;
  }
  // No-op if already held.
  void assign(std::size_t n, int k);

  // M_n, the number of PRBs held by cell n.
  int count(std::size_t n) const { return counts_[n]; }
  std::vector<int> counts() const { return counts_; }
  int total() const;

  // Held PRB indices of cell n, ascending.
  std::vector<int> prbs_of(std::size_t n) const;

  bool operator==(const PrbAssociation&) const = default;

 private:
  Matrix<std::uint8_t> table_;
  std::vector<int> counts_;
};

// o(n, k): aggregate interference power (W) received by SeNB n on PRB k from
// every other UE holding k.
using InterferenceTable = Matrix<double>;

// Shannon rate of one PRB carrying signal_w against noise plus interference_w.
double prb_rate(const RadioParams& radio, double signal_w, double interference_w);

// Uplink rate of UE n in bit/s. Each holding UE splits its power evenly
// across its PRBs; interference comes from every other offloading UE on the
// same PRB. Returns 0 for local UEs. Throws InconsistentTables if a local
// UE holds PRBs or an offloading UE holds none.
double uplink_rate(std::size_t n, const OffloadDecision& decision,
                   const PrbAssociation& prbs, const ChannelGains& gains,
                   const RadioParams& radio, std::span<const double> powers);

InterferenceTable interference_table(const PrbAssociation& prbs,
                                     const ChannelGains& gains,
                                     std::span<const double> powers);

}  // namespace mecsim

#endif  // MECSIM_RADIO_H_
