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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.h"
#include "mecsim/cpu_allocation.h"
#include "mecsim/decision_engine.h"
#include "mecsim/load_estimation.h"
#include "mecsim/prb_coloring.h"
#include "mecsim/radio.h"
#include "mecsim/scenario.h"
#include "oracles.h"

namespace mecsim {
namespace {

using testing::rel_diff;

struct Verdict {
  bool pass = true;
  std::string detail;
};

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Problem make_problem(const ScenarioConfig& config, std::uint64_t seed) {
  Scenario s = build_scenario(config, seed);
  ChannelGains g = channel_gains(s);
  return Problem(std::move(s), std::move(g));
}

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, a, b, c);
  return buf;
}

Verdict ac1_min_prbs() {
  std::mt19937_64 rng(1);
  const int ks[] = {10, 50, 100};
  int mismatches = 0;
  int infeasible = 0;
  for (int draw = 0; draw < 1000; ++draw) {
    const RadioParams radio{20e6, ks[rng() % 3], 1e-13};
    Ue ue;
    ue.tx_power_w = 0.1;
    const double snr = std::pow(10.0, uniform(rng, 0.0, 4.0));
    const double gain = snr * radio.noise_per_prb_w / ue.tx_power_w;
    const double ceiling = prb_demand_rate(radio.num_prbs, ue, gain, radio);
    const double rate = ceiling * uniform(rng, 0.02, 1.5);
    const auto got = min_prbs(ue, gain, radio, rate);
    const auto want = testing::min_prbs_linear_scan(ue.tx_power_w, gain, radio, rate);
    if (!want) ++infeasible;
    if (got != want) ++mismatches;
  }
  return {mismatches == 0,
          fmt("%.0f mismatches in 1000 draws (%.0f infeasible)", mismatches, infeasible)};
}

Verdict ac2_cpu_oracles() {
  std::mt19937_64 rng(2);
  const double capacity = 100e9;
  double worst_obj = 0.0;
  double worst_budget = 0.0;
  double worst_cap = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto r = testing::random_cpu_instance(rng, 4, capacity, trial % 4 == 0);
    const CpuAllocation mm = allocate_minmax(r, capacity);
    const CpuAllocation ms = allocate_minsum(r, capacity);
    worst_obj = std::max(worst_obj, rel_diff(mm.objective, testing::grid_minmax(r, capacity)));
    worst_obj = std::max(worst_obj, rel_diff(ms.objective, testing::grid_minsum(r, capacity)));
    for (const CpuAllocation* a : {&mm, &ms}) {
      double sum = 0.0;
      for (std::size_t i = 0; i < r.size(); ++i) {
        sum += a->f[i];
        worst_cap = std::max(worst_cap, r[i].cycles / a->f[i] / r[i].t_cap_s - 1.0);
      }
      worst_budget = std::max(worst_budget, rel_diff(sum, capacity));
    }
  }
  return {worst_obj <= 1e-4 && worst_budget <= 1e-9 && worst_cap <= 1e-9,
          fmt("objective %.2e, budget %.2e, cap excess %.2e", worst_obj, worst_budget,
              worst_cap)};
}

Verdict ac3_minmax_equalization() {
  std::mt19937_64 rng(3);
  const double capacity = 100e9;
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto r = testing::random_cpu_instance(rng, 6, capacity, true);
    const CpuAllocation mm = allocate_minmax(r, capacity);
    double cycles = 0.0;
    for (const auto& q : r) cycles += q.cycles;
    const double bound = cycles / capacity;
    for (std::size_t i = 0; i < r.size(); ++i) {
      worst = std::max(worst, rel_diff(r[i].cycles / mm.f[i], bound));
    }
  }
  return {worst <= 1e-9, fmt("max deviation from sum(D)/F %.2e", worst)};
}

Verdict ac4_coloring_replay() {
  int steps = 0;
  int bad_colors = 0;
  double worst_o = 0.0;
  for (double lambda : {1.0, 2.0}) {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
      ScenarioConfig config;
      config.num_prbs = 25;
      config.reuse_lambda = lambda;
      const Problem p = make_problem(config, seed);
      const auto& set = p.candidates();
      if (set.empty()) continue;
      const Scenario& s = p.scenario();
      const std::vector<int> m = normalize_prbs(p.demands(), set, 25, lambda);
      const InterferenceGraph graph =
          build_interference_graph(p.gains(), m, p.powers(), set, s.edge_threshold);
      const ColoringState state =
          color(graph, m, p.gains(), p.powers(), s.radio, [&](const ColoringState& st) {
            const InterferenceTable fresh = interference_table(st.c, p.gains(), p.powers());
            for (std::size_t i = 0; i < fresh.data().size(); ++i) {
              worst_o = std::max(worst_o, rel_diff(fresh.data()[i], st.o.data()[i]));
            }
          });
      PrbAssociation before(p.size(), 25);
      for (const ColoringStep& step : state.steps) {
        ++steps;
        const auto sums = testing::sum_rates_from_scratch(before, step.node, set, m, p.gains(),
                                                          p.powers(), s.radio);
        if (!testing::is_top_set(sums, step.colors, 1e-12)) ++bad_colors;
        for (int j : step.colors) before.assign(step.node, j);
      }
      if (!(before == state.c)) ++bad_colors;
    }
  }
  return {bad_colors == 0 && worst_o <= 1e-12,
          fmt("%.0f steps, %.0f off-top choices, table error %.2e", steps, bad_colors, worst_o)};
}

Verdict ac5_greedy_monotone() {
  int violations = 0;
  int flips = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const Problem p = make_problem(ScenarioConfig{}, seed);
    const OffloadDecision a0 = initial_decision(p.estimates(), p.candidate_report());
    for (CpuObjective obj : {CpuObjective::kMinSum, CpuObjective::kMinMax}) {
      const GreedyResult r = greedy_reallocate(a0, p, obj);
      const double initial = evaluate(a0, p, obj).system_overhead;
      flips += r.flips_accepted;
      if (!(r.outcome.system_overhead <= initial)) ++violations;
    }
  }
  return {violations == 0, fmt("%.0f violations in 200 runs, %.0f accepted flips", violations,
                               flips)};
}

Verdict ac6_cell_sweep_trend() {
  const int cells[] = {3, 5, 7, 9};
  std::map<cli::Scheme, std::vector<double>> means;
  for (int n : cells) {
    ScenarioConfig config;
    config.n_cells = n;
    std::map<cli::Scheme, double> sum;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
      for (cli::Scheme scheme : cli::all_schemes()) {
        sum[scheme] += cli::run_record(config, seed, scheme).system_overhead;
      }
    }
    for (auto& [scheme, total] : sum) means[scheme].push_back(total / 50.0);
  }
  bool pass = true;
  for (const auto& [scheme, v] : means) {
    for (std::size_t i = 1; i < v.size(); ++i) pass = pass && v[i] >= v[i - 1];
  }
  const auto& proposed = means[cli::Scheme::kProposedMinSum];
  for (std::size_t i = 0; i < proposed.size(); ++i) {
    pass = pass && proposed[i] <= means[cli::Scheme::kAllLocal][i] &&
           proposed[i] <= means[cli::Scheme::kAllOffloadOrth][i];
  }
  return {pass, fmt("N=9 means: proposed %.4f, orthogonal %.4f, local %.4f", proposed.back(),
                    means[cli::Scheme::kAllOffloadOrth].back(),
                    means[cli::Scheme::kAllLocal].back())};
}

Verdict ac7_reuse_pattern() {
  int reuse_seeds = 0;
  double co_sum = 0.0, all_sum = 0.0;
  int co_pairs = 0, all_pairs = 0;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    ScenarioConfig config;
    config.num_prbs = 25;
    config.reuse_lambda = 2.0;
    const Problem p = make_problem(config, seed);
    const AllocationOutcome out = run_proposed(p, CpuObjective::kMinSum);
    if (out.c.total() > 25) ++reuse_seeds;
    const auto set = out.decision.offload_set();
    for (std::size_t i = 0; i < set.size(); ++i) {
      for (std::size_t k = i + 1; k < set.size(); ++k) {
        const std::size_t m = set[i], n = set[k];
        const double power = p.powers()[m] / out.prbs[m] * p.gains()(m, n) +
                             p.powers()[n] / out.prbs[n] * p.gains()(n, m);
        bool shared = false;
        for (int j = 0; j < 25 && !shared; ++j) shared = out.c.holds(m, j) && out.c.holds(n, j);
        all_sum += power;
        ++all_pairs;
        if (shared) {
          co_sum += power;
          ++co_pairs;
        }
      }
    }
  }
  const double co_mean = co_pairs > 0 ? co_sum / co_pairs : 0.0;
  const double all_mean = all_pairs > 0 ? all_sum / all_pairs : 0.0;
  const bool pass = reuse_seeds >= 45 && co_pairs > 0 && co_mean < all_mean;
  return {pass, fmt("reuse in %.0f/50 seeds, co-channel mean %.3e W vs all-pairs %.3e W",
                    reuse_seeds, co_mean, all_mean)};
}

Verdict ac8_small_instances() {
  double worst = 0.0;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    ScenarioConfig config;
    config.n_cells = 2 + static_cast<int>(seed % 2);
    config.num_prbs = 3 + static_cast<int>((seed / 2) % 2);
    const Problem p = make_problem(config, seed);
    for (CpuObjective obj : {CpuObjective::kMinSum, CpuObjective::kMinMax}) {
      const double greedy = run_proposed(p, obj).system_overhead;
      const double best = testing::exhaustive_best(p, obj).system_overhead;
      worst = std::max(worst, greedy / best);
    }
  }
  return {worst <= 1.25, fmt("worst greedy / exhaustive ratio %.4f", worst)};
}

Verdict ac9_determinism() {
  cli::SweepSpec spec;
  spec.key = cli::SweepKey::kCells;
  spec.values = {3, 5, 7, 9};
  for (std::uint64_t s = 1; s <= 20; ++s) spec.seeds.push_back(s);
  spec.schemes = cli::all_schemes();
  std::ostringstream a, b;
  cli::run_sweep(ScenarioConfig{}, spec, a);
  cli::run_sweep(ScenarioConfig{}, spec, b);
  return {a.str() == b.str() && !a.str().empty(),
          fmt("%.0f bytes per sweep", static_cast<double>(a.str().size()))};
}

Verdict ac10_rate_identity() {
  std::mt19937_64 rng(10);
  double worst = 0.0;
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    ScenarioConfig config;
    config.n_cells = 2 + static_cast<int>(rng() % 8);
    config.num_prbs = 10 + static_cast<int>(rng() % 91);
    config.reuse_lambda = uniform(rng, 1.0, 3.0);
    const Problem p = make_problem(config, seed);
    const auto& set = p.candidates();
    if (set.empty()) continue;
    const Scenario& s = p.scenario();
    const std::vector<int> m = normalize_prbs(p.demands(), set, config.num_prbs,
                                              config.reuse_lambda);
    const InterferenceGraph graph =
        build_interference_graph(p.gains(), m, p.powers(), set, s.edge_threshold);
    const ColoringState state = color(graph, m, p.gains(), p.powers(), s.radio);
    const std::vector<double> realized = realized_rates(state, m, p.gains(), p.powers(), s.radio);
    OffloadDecision decision(p.size());
    for (std::size_t n : set) decision.set(n, true);
    for (std::size_t n : set) {
      const double direct = uplink_rate(n, decision, state.c, p.gains(), s.radio, p.powers());
      worst = std::max(worst, rel_diff(realized[n], direct));
      ++checked;
    }
  }
  return {worst <= 1e-12 && checked > 0, fmt("%.0f rates, max error %.2e", checked, worst)};
}

}  // namespace
}  // namespace mecsim

int main() {
  using Criterion = std::pair<const char*, std::function<mecsim::Verdict()>>;
  const std::vector<Criterion> criteria = {
      {"AC1 min-PRB search matches linear scan", mecsim::ac1_min_prbs},
      {"AC2 CPU allocation matches grid search", mecsim::ac2_cpu_oracles},
      {"AC3 min-max equalizes execution times", mecsim::ac3_minmax_equalization},
      {"AC4 coloring step replay", mecsim::ac4_coloring_replay},
      {"AC5 greedy never worse than initial decision", mecsim::ac5_greedy_monotone},
      {"AC6 overhead trend over cell count", mecsim::ac6_cell_sweep_trend},
      {"AC7 frequency reuse pattern", mecsim::ac7_reuse_pattern},
      {"AC8 greedy within 25% of exhaustive", mecsim::ac8_small_instances},
      {"AC9 identical sweeps are byte-identical", mecsim::ac9_determinism},
      {"AC10 realized rate equals uplink rate", mecsim::ac10_rate_identity},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    mecsim::Verdict v;
    try {
      v = run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s  %s: %s [%.2f s]\n", v.pass ? "PASS" : "FAIL", name, v.detail.c_str(), secs);
    if (!v.pass) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
