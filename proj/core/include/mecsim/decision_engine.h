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

#ifndef MECSIM_DECISION_ENGINE_H_
#define MECSIM_DECISION_ENGINE_H_

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "mecsim/cpu_allocation.h"
#include "mecsim/load_estimation.h"
#include "mecsim/radio.h"
#include "mecsim/scenario.h"

namespace mecsim {

// Interference-free estimate of the offloading cost of every UE in a
// hypothesized offloading set, assuming the K PRBs are split orthogonally in
// proportion to the PRB demands. Vectors have length N; entries outside the
// set are 0 (rates, shares) or +inf (times, energies, overheads).
struct EstimationReport {
  std::vector<std::size_t> offload_set;
  std::vector<double> m_tilde;
  std::vector<double> rate_bps;
  std::vector<double> t_off_s;
  std::vector<double> e_off_j;
  std::vector<double> t_exe_s;
  std::vector<double> t_total_s;
  std::vector<double> overhead;
};

// Scenario, gains and the per-UE load estimates, computed once and shared by
// every evaluation of the same network.
class Problem {
 public:
  Problem(Scenario scenario, ChannelGains gains);

  const Scenario& scenario() const { return scenario_; }
  const ChannelGains& gains() const { return gains_; }
  const std::vector<double>& powers() const { return powers_; }
  const std::vector<LoadEstimate>& estimates() const { return estimates_; }
  std::size_t size() const { return scenario_.size(); }

  // UEs whose offloading is not ruled out by load estimation.
  const std::vector<std::size_t>& candidates() const { return candidates_; }
  // Orthogonal estimate over all candidates; empty set gives an all-inf report.
  const EstimationReport& candidate_report() const { return candidate_report_; }

  // PRB demands w_n (0 for non-candidates).
  std::vector<int> demands() const;

 private:
  Scenario scenario_;
  ChannelGains gains_;
  std::vector<double> powers_;
  std::vector<LoadEstimate> estimates_;
  std::vector<std::size_t> candidates_;
  EstimationReport candidate_report_;
};

// Throws EmptyOffloadSet for an empty set.
EstimationReport orthogonal_estimate(std::span<const LoadEstimate> estimates,
                                     std::span<const std::size_t> offload_set,
                                     const Scenario& scenario,
                                     const ChannelGains& gains);

// Offload iff the local overhead strictly exceeds the estimate; ties and
// non-candidates stay local.
OffloadDecision initial_decision(std::span<const LoadEstimate> estimates,
                                 const EstimationReport& report);

// System overhead after re-normalizing the PRBs over the decision's
// offloading set, still interference-free. Informational only.
double estimated_system_overhead(const OffloadDecision& decision,
                                 const Problem& problem);

struct AllocationOutcome {
  OffloadDecision decision;
  // PRB demands scaled by the reuse factor (0 for local UEs).
  std::vector<int> prbs;
  PrbAssociation c;
  InterferenceTable o;
  std::vector<double> rates;
  // Server capacity per UE (0 for local UEs).
  std::vector<double> cpu_hz;
  double cpu_objective = 0.0;
  // Local overhead for local UEs, offloading overhead otherwise.
  std::vector<double> per_ue_overhead;
  double system_overhead = 0.0;
  CpuObjective objective_kind = CpuObjective::kMinSum;

  bool feasible() const;
};

// Runs PRB normalization, interference graph, coloring, realized rates and
// CPU allocation for a fixed decision. Candidates with a zero rate or an
// infeasible CPU split yield system_overhead = +inf. Throws
// std::invalid_argument if a non-candidate is marked as offloading.
AllocationOutcome evaluate(const OffloadDecision& decision,
                           const Problem& problem, CpuObjective objective);

struct GreedyResult {
  AllocationOutcome outcome;
  double initial_overhead = 0.0;
  int flips_tried = 0;
  int flips_accepted = 0;
  // Offloaders demoted to restore feasibility of the initial decision.
  int forced_reverts = 0;
};

// Tries the local UEs one at a time in ascending order of their estimated
// offloading overhead and keeps a flip only if the system overhead drops.
GreedyResult greedy_reallocate(const OffloadDecision& initial,
                               const Problem& problem, CpuObjective objective);

// Full proposed pipeline: initial decision followed by greedy reallocation.
AllocationOutcome run_proposed(const Problem& problem, CpuObjective objective);

enum class Baseline { kAllLocal, kAllOffloadOrthogonal, kEqualCpu };

std::string_view baseline_name(Baseline baseline);

AllocationOutcome run_baseline(Baseline baseline, const Problem& problem);

}  // namespace mecsim

#endif  // MECSIM_DECISION_ENGINE_H_
