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

#include "mecsim/prb_coloring.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mecsim/error.h"

namespace mecsim {
namespace {

double per_prb_power(std::span<const double> powers, std::span<const int> prbs,
                     std::size_t n) {
  return powers[n] / prbs[n];
}

}  // namespace

std::vector<int> normalize_prbs(std::span<const int> w,
                                std::span<const std::size_t> offload_set,
                                int num_prbs, double lambda) {
  if (offload_set.empty()) throw EmptyOffloadSet("no offloading cells");
  double total = 0.0;
  for (std::size_t n : offload_set) total += w[n];

  std::vector<int> out(w.size(), 0);
  for (std::size_t n : offload_set) {
    const double share = num_prbs * (w[n] / total);
    // nearbyint rounds half to even under the default rounding mode.
    const double scaled = std::nearbyint(lambda * share);
    out[n] = static_cast<int>(std::clamp(scaled, 1.0, double(num_prbs)));
  }
  return out;
}

bool InterferenceGraph::has_edge(std::size_t from, std::size_t to) const {
  return std::any_of(edges.begin(), edges.end(), [&](const InterferenceEdge& e) {
    return e.from == from && e.to == to;
  });
}

InterferenceGraph build_interference_graph(
    const ChannelGains& gains, std::span<const int> prbs,
    std::span<const double> powers, std::span<const std::size_t> offload_set,
    double threshold) {
  InterferenceGraph graph;
  graph.nodes.assign(offload_set.begin(), offload_set.end());
  graph.ingoing_weight.assign(gains.rows(), 0.0);
  for (std::size_t n : offload_set) {
    for (std::size_t m : offload_set) {
      if (m == n || !(gains(m, n) / gains(n, n) > threshold)) continue;
      const double weight = per_prb_power(powers, prbs, m) * gains(m, n);
      graph.edges.push_back({m, n, weight});
      graph.ingoing_weight[n] += weight;
    }
  }
  return graph;
}

std::vector<double> candidate_sum_rates(const ColoringState& state,
                                        std::size_t node,
                                        std::span<const int> prbs,
                                        const ChannelGains& gains,
                                        std::span<const double> powers,
                                        const RadioParams& radio) {
  const std::size_t cells = state.c.num_cells();
  const int k_total = state.c.num_prbs();

  auto signal = [&](std::size_t n) {
    return per_prb_power(powers, prbs, n) * gains(n, n);
  };

  // Rates of the already colored nodes under the current tables.
  double base = 0.0;
  for (std::size_t n = 0; n < cells; ++n) {
    if (n == node) continue;
    for (int q : state.color_sets[n]) {
      base += prb_rate(radio, signal(n), state.o(n, static_cast<std::size_t>(q)));
    }
  }

  const double node_power = per_prb_power(powers, prbs, node);
  std::vector<double> sums(static_cast<std::size_t>(k_total), 0.0);
  for (int j = 0; j < k_total; ++j) {
    const auto col = static_cast<std::size_t>(j);
    double s = base;
    if (!state.c.holds(node, j)) {
      s += prb_rate(radio, signal(node), state.o(node, col));
    }
    // Joining color j adds interference at every other holder of j.
    for (std::size_t n = 0; n < cells; ++n) {
      if (n == node || !state.c.holds(n, j)) continue;
      const double before = state.o(n, col);
      const double after = before + node_power * gains(node, n);
      s += prb_rate(radio, signal(n), after) - prb_rate(radio, signal(n), before);
    }
    sums[col] = s;
  }
  return sums;
}

ColoringState color(const InterferenceGraph& graph, std::span<const int> prbs,
                    const ChannelGains& gains, std::span<const double> powers,
                    const RadioParams& radio, const ColoringObserver& observer) {
  const std::size_t cells = gains.rows();
  const int k_total = radio.num_prbs;

  ColoringState state;
  state.c = PrbAssociation(cells, k_total);
  state.o = InterferenceTable(cells, static_cast<std::size_t>(k_total), 0.0);
  state.color_sets.assign(cells, {});

  std::vector<std::size_t> uncolored = graph.nodes;
  while (!uncolored.empty()) {
    auto most_interfered = std::min_element(
        uncolored.begin(), uncolored.end(), [&](std::size_t a, std::size_t b) {
          if (graph.ingoing_weight[a] != graph.ingoing_weight[b]) {
            return graph.ingoing_weight[a] > graph.ingoing_weight[b];
          }
          if (prbs[a] != prbs[b]) return prbs[a] < prbs[b];
          return a < b;
        });
    const std::size_t node = *most_interfered;
    uncolored.erase(most_interfered);

    const std::vector<double> sums =
        candidate_sum_rates(state, node, prbs, gains, powers, radio);
    std::vector<int> ranking(static_cast<std::size_t>(k_total));
    std::iota(ranking.begin(), ranking.end(), 0);
    std::stable_sort(ranking.begin(), ranking.end(), [&](int a, int b) {
      return sums[static_cast<std::size_t>(a)] > sums[static_cast<std::size_t>(b)];
    });
    std::vector<int> chosen(ranking.begin(), ranking.begin() + prbs[node]);
    std::sort(chosen.begin(), chosen.end());

    const double node_power = per_prb_power(powers, prbs, node);
    for (int j : chosen) {
      state.c.assign(node, j);
      for (std::size_t n = 0; n < cells; ++n) {
        if (n != node) {
          state.o(n, static_cast<std::size_t>(j)) += node_power * gains(node, n);
        }
      }
    }
    state.color_sets[node] = chosen;
    state.steps.push_back({node, std::move(chosen)});
    if (observer) observer(state);
  }
  return state;
}

std::vector<double> realized_rates(const ColoringState& state,
                                   std::span<const int> prbs,
                                   const ChannelGains& gains,
                                   std::span<const double> powers,
                                   const RadioParams& radio) {
  const std::size_t cells = state.c.num_cells();
  std::vector<double> rates(cells, 0.0);
  for (std::size_t n = 0; n < cells; ++n) {
    if (state.color_sets[n].empty()) continue;
    const double signal = per_prb_power(powers, prbs, n) * gains(n, n);
    for (int j : state.color_sets[n]) {
      rates[n] += prb_rate(radio, signal, state.o(n, static_cast<std::size_t>(j)));
    }
  }
  return rates;
}

}  // namespace mecsim
