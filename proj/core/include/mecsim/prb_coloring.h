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

#ifndef MECSIM_PRB_COLORING_H_
#define MECSIM_PRB_COLORING_H_

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "mecsim/radio.h"
#include "mecsim/scenario.h"

namespace mecsim {

// Scales the PRB demands `w` of the offloading cells so they sum to K, then
// inflates them by the reuse factor `lambda`:
//   M_n = clamp(round_half_even(lambda * K * w_n / sum(w)), 1, K).
// Returns a length-N vector that is zero outside `offload_set`.
// Throws EmptyOffloadSet if the set is empty.
std::vector<int> normalize_prbs(std::span<const int> w,
                                std::span<const std::size_t> offload_set,
                                int num_prbs, double lambda);

struct InterferenceEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  // Per-PRB power of `from` received at SeNB `to` (W).
  double weight = 0.0;
};

// Directed graph over the offloading cells. An edge m -> n exists iff
// h(m, n) / h(n, n) > threshold.
struct InterferenceGraph {
  std::vector<std::size_t> nodes;
  std::vector<InterferenceEdge> edges;
  // Sum of ingoing edge weights, indexed by cell (length N).
  std::vector<double> ingoing_weight;

  bool has_edge(std::size_t from, std::size_t to) const;
};

InterferenceGraph build_interference_graph(
    const ChannelGains& gains, std::span<const int> prbs,
    std::span<const double> powers, std::span<const std::size_t> offload_set,
    double threshold);

struct ColoringStep {
  std::size_t node = 0;
  // Ascending.
  std::vector<int> colors;
};

struct ColoringState {
  PrbAssociation c;
  InterferenceTable o;
  // One entry per colored node, in coloring order.
  std::vector<ColoringStep> steps;
  // Colors held by each cell (length N, empty for cells not colored).
  std::vector<std::vector<int>> color_sets;
};

// Called after every node is colored and the tables are updated.
using ColoringObserver = std::function<void(const ColoringState&)>;

// Greedy weighted coloring. Nodes are visited by decreasing ingoing edge
// weight (ties: fewer PRBs first, then lower index). Each node takes the
// prbs[node] colors that maximize the sum of the potential rates of all
// colored nodes under the hypothesis that the node joins that color (ties:
// lower color index). The interference table is updated incrementally.
ColoringState color(const InterferenceGraph& graph, std::span<const int> prbs,
                    const ChannelGains& gains, std::span<const double> powers,
                    const RadioParams& radio,
                    const ColoringObserver& observer = {});

// Hypothetical sum rate for every color if `node` were given that color in
// the current state. Exposed for inspection; color() uses it internally.
std::vector<double> candidate_sum_rates(const ColoringState& state,
                                        std::size_t node,
                                        std::span<const int> prbs,
                                        const ChannelGains& gains,
                                        std::span<const double> powers,
                                        const RadioParams& radio);

// Achieved rate of every colored cell (0 for others), using the final
// interference table.
std::vector<double> realized_rates(const ColoringState& state,
                                   std::span<const int> prbs,
                                   const ChannelGains& gains,
                                   std::span<const double> powers,
                                   const RadioParams& radio);

}  // namespace mecsim

#endif  // MECSIM_PRB_COLORING_H_
