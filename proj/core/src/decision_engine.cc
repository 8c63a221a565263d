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

#include "mecsim/decision_engine.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "mecsim/compute_model.h"
#include "mecsim/error.h"
#include "mecsim/prb_coloring.h"

namespace mecsim {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

EstimationReport empty_report(std::size_t n) {
  EstimationReport report;
  report.m_tilde.assign(n, 0.0);
  report.rate_bps.assign(n, 0.0);
  report.t_off_s.assign(n, kInf);
  report.e_off_j.assign(n, kInf);
  report.t_exe_s.assign(n, kInf);
  report.t_total_s.assign(n, kInf);
  report.overhead.assign(n, kInf);
  return report;
}

// Outcome with every UE computing locally and empty tables.
AllocationOutcome local_outcome(const OffloadDecision& decision,
                                const Problem& problem, CpuObjective objective) {
  const std::size_t n = problem.size();
  const int k = problem.scenario().radio.num_prbs;
  AllocationOutcome out;
  out.decision = decision;
  out.objective_kind = objective;
  out.prbs.assign(n, 0);
  out.c = PrbAssociation(n, k);
  out.o = InterferenceTable(n, static_cast<std::size_t>(k), 0.0);
  out.rates.assign(n, 0.0);
  out.cpu_hz.assign(n, 0.0);
  out.per_ue_overhead.reserve(n);
  for (const LoadEstimate& est : problem.estimates()) {
    out.per_ue_overhead.push_back(est.local.overhead);
  }
  out.system_overhead =
      std::accumulate(out.per_ue_overhead.begin(), out.per_ue_overhead.end(), 0.0);
  return out;
}

void mark_infeasible(AllocationOutcome& out) {
  for (std::size_t n : out.decision.offload_set()) {
    out.per_ue_overhead[n] = kInf;
    out.cpu_hz[n] = 0.0;
  }
  out.cpu_objective = kInf;
  out.system_overhead = kInf;
}

double execution_cap(const Ue& ue, double rate_bps) {
  if (!(rate_bps > 0)) return -kInf;
  return ue.task.cycles / ue.local_speed_hz - ue.task.input_bits / rate_bps;
}

// Given rates and PRB tables in `out`, allocates server capacity and fills
// in the overheads.
void finish_outcome(AllocationOutcome& out, const Problem& problem,
                    CpuObjective objective) {
  const Scenario& s = problem.scenario();
  const std::vector<std::size_t> offloaders = out.decision.offload_set();
  std::vector<CpuRequest> requests;
  requests.reserve(offloaders.size());
  for (std::size_t n : offloaders) {
    if (!(out.rates[n] > 0)) {
      mark_infeasible(out);
      return;
    }
    requests.push_back({n, s.ues[n].task.cycles, execution_cap(s.ues[n], out.rates[n])});
  }

  CpuAllocation alloc;
  try {
    alloc = allocate(objective, requests, s.mec_capacity_hz);
  } catch (const InfeasibleAllocation&) {
    mark_infeasible(out);
    return;
  }

  out.cpu_objective = alloc.objective;
  for (std::size_t i = 0; i < requests.size(); ++i) {
    const std::size_t n = requests[i].ue;
    out.cpu_hz[n] = alloc.f[i];
    out.per_ue_overhead[n] =
        offload_overhead(s.ues[n], out.rates[n], alloc.f[i]).overhead;
  }
  out.system_overhead =
      std::accumulate(out.per_ue_overhead.begin(), out.per_ue_overhead.end(), 0.0);
}

void check_decision(const OffloadDecision& decision, const Problem& problem) {
  if (decision.size() != problem.size()) {
    throw std::invalid_argument("decision size does not match the scenario");
  }
  for (std::size_t n : decision.offload_set()) {
    if (!problem.estimates()[n].candidate()) {
      throw std::invalid_argument("UE " + std::to_string(n) +
                                  " cannot offload but is marked as offloading");
    }
  }
}

}  // namespace

Problem::Problem(Scenario scenario, ChannelGains gains)
    : scenario_(std::move(scenario)), gains_(std::move(gains)) {
  scenario_.validate();
  if (gains_.rows() != scenario_.size() || gains_.cols() != scenario_.size()) {
    throw std::invalid_argument("channel gain matrix does not match the scenario");
  }
  powers_ = scenario_.tx_powers();
  estimates_ = estimate_loads(scenario_, gains_);
  for (const LoadEstimate& est : estimates_) {
    if (est.candidate()) candidates_.push_back(est.ue);
  }
  candidate_report_ =
      candidates_.empty()
          ? empty_report(scenario_.size())
          : orthogonal_estimate(estimates_, candidates_, scenario_, gains_);
}

std::vector<int> Problem::demands() const {
  std::vector<int> w;
  w.reserve(estimates_.size());
  for (const LoadEstimate& est : estimates_) w.push_back(est.w);
  return w;
}

EstimationReport orthogonal_estimate(std::span<const LoadEstimate> estimates,
                                     std::span<const std::size_t> offload_set,
                                     const Scenario& scenario,
                                     const ChannelGains& gains) {
  if (offload_set.empty()) throw EmptyOffloadSet("empty offloading set");
  EstimationReport report = empty_report(scenario.size());
  report.offload_set.assign(offload_set.begin(), offload_set.end());

  double total_w = 0.0;
  for (std::size_t n : offload_set) {
    if (!estimates[n].candidate()) {
      throw std::invalid_argument("offloading set contains a non-candidate UE");
    }
    total_w += estimates[n].w;
  }

  const RadioParams& radio = scenario.radio;
  for (std::size_t n : offload_set) {
    const Ue& ue = scenario.ues[n];
    const double m = radio.num_prbs * (estimates[n].w / total_w);
    const double rate =
        m * radio.prb_bandwidth_hz() *
        std::log2(1.0 + ue.tx_power_w * gains(n, n) / (m * radio.noise_per_prb_w));
    report.m_tilde[n] = m;
    report.rate_bps[n] = rate;
    report.t_off_s[n] = ue.task.input_bits / rate;
    report.e_off_j[n] = ue.tx_power_w * ue.task.input_bits / rate;
    report.t_exe_s[n] = estimates[n].t_exe_est_s;
    report.t_total_s[n] = report.t_off_s[n] + report.t_exe_s[n];
    report.overhead[n] = weighted_overhead(ue, report.t_total_s[n], report.e_off_j[n]);
  }
  return report;
}

OffloadDecision initial_decision(std::span<const LoadEstimate> estimates,
                                 const EstimationReport& report) {
  OffloadDecision decision(estimates.size());
  for (const LoadEstimate& est : estimates) {
    if (est.candidate() && est.local.overhead > report.overhead[est.ue]) {
      decision.set(est.ue, true);
    }
  }
  return decision;
}

double estimated_system_overhead(const OffloadDecision& decision,
                                 const Problem& problem) {
  check_decision(decision, problem);
  const std::vector<std::size_t> offloaders = decision.offload_set();
  EstimationReport report =
      offloaders.empty() ? empty_report(problem.size())
                         : orthogonal_estimate(problem.estimates(), offloaders,
                                               problem.scenario(), problem.gains());
  double total = 0.0;
  for (std::size_t n = 0; n < problem.size(); ++n) {
    total += decision.offloads(n) ? report.overhead[n]
                                  : problem.estimates()[n].local.overhead;
  }
  return total;
}

bool AllocationOutcome::feasible() const { return std::isfinite(system_overhead); }

AllocationOutcome evaluate(const OffloadDecision& decision,
                           const Problem& problem, CpuObjective objective) {
  check_decision(decision, problem);
  AllocationOutcome out = local_outcome(decision, problem, objective);
  const std::vector<std::size_t> offloaders = decision.offload_set();
  if (offloaders.empty()) return out;

  const Scenario& s = problem.scenario();
  const std::vector<int> w = problem.demands();
  out.prbs = normalize_prbs(w, offloaders, s.radio.num_prbs, s.reuse_lambda);
  const InterferenceGraph graph = build_interference_graph(
      problem.gains(), out.prbs, problem.powers(), offloaders, s.edge_threshold);
  ColoringState state =
      color(graph, out.prbs, problem.gains(), problem.powers(), s.radio);
  out.rates = realized_rates(state, out.prbs, problem.gains(), problem.powers(),
                             s.radio);
  out.c = std::move(state.c);
  out.o = std::move(state.o);
  finish_outcome(out, problem, objective);
  return out;
}

GreedyResult greedy_reallocate(const OffloadDecision& initial,
                               const Problem& problem, CpuObjective objective) {
  GreedyResult result;
  OffloadDecision current = initial;
  AllocationOutcome best = evaluate(current, problem, objective);
  result.initial_overhead = best.system_overhead;
  if (current.all_offloading() && best.feasible()) {
    result.outcome = std::move(best);
    return result;
  }

  // Demote the heaviest server demands until the decision is feasible.
  const Scenario& s = problem.scenario();
  while (!best.feasible()) {
    std::size_t heaviest = 0;
    double heaviest_bound = -1.0;
    for (std::size_t n : current.offload_set()) {
      const double cap = execution_cap(s.ues[n], best.rates[n]);
      const double bound = cap > 0 ? s.ues[n].task.cycles / cap : kInf;
      if (bound > heaviest_bound) {
        heaviest = n;
        heaviest_bound = bound;
      }
    }
    current.set(heaviest, false);
    ++result.forced_reverts;
    best = evaluate(current, problem, objective);
  }

  std::vector<std::size_t> order;
  for (std::size_t n : current.local_set()) {
    if (problem.estimates()[n].candidate()) order.push_back(n);
  }
  const std::vector<double>& estimate = problem.candidate_report().overhead;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return estimate[a] < estimate[b];
  });

  for (std::size_t n : order) {
    OffloadDecision trial = current;
    trial.set(n, true);
    ++result.flips_tried;
    AllocationOutcome candidate = evaluate(trial, problem, objective);
    if (candidate.system_overhead < best.system_overhead) {
      current = std::move(trial);
      best = std::move(candidate);
      ++result.flips_accepted;
    }
  }
  result.outcome = std::move(best);
  return result;
}

AllocationOutcome run_proposed(const Problem& problem, CpuObjective objective) {
  const OffloadDecision initial =
      initial_decision(problem.estimates(), problem.candidate_report());
  return greedy_reallocate(initial, problem, objective).outcome;
}

std::string_view baseline_name(Baseline baseline) {
  switch (baseline) {
    case Baseline::kAllLocal:
      return "all_local";
    case Baseline::kAllOffloadOrthogonal:
      return "all_offload_orth";
    case Baseline::kEqualCpu:
      return "equal_cpu";
  }
  return "unknown";
}

AllocationOutcome run_baseline(Baseline baseline, const Problem& problem) {
  switch (baseline) {
    case Baseline::kAllLocal:
      return evaluate(OffloadDecision(problem.size()), problem,
                      CpuObjective::kEqualSplit);
    case Baseline::kEqualCpu:
      return run_proposed(problem, CpuObjective::kEqualSplit);
    case Baseline::kAllOffloadOrthogonal:
      break;
  }

  // Every candidate offloads on floor-normalized contiguous PRB blocks, no
  // reuse unless the one-PRB minimum forces wrap-around.
  OffloadDecision decision(problem.size());
  for (std::size_t n : problem.candidates()) decision.set(n, true);
  AllocationOutcome out =
      local_outcome(decision, problem, CpuObjective::kEqualSplit);
  if (problem.candidates().empty()) return out;

  const Scenario& s = problem.scenario();
  const int k_total = s.radio.num_prbs;
  double total_w = 0.0;
  for (std::size_t n : problem.candidates()) total_w += problem.estimates()[n].w;

  int cursor = 0;
  for (std::size_t n : problem.candidates()) {
    const double share = k_total * (problem.estimates()[n].w / total_w);
    const int count = std::clamp(static_cast<int>(std::floor(share)), 1, k_total);
    out.prbs[n] = count;
    for (int i = 0; i < count; ++i) {
      out.c.assign(n, cursor);
      cursor = (cursor + 1) % k_total;
    }
  }
  out.o = interference_table(out.c, problem.gains(), problem.powers());
  for (std::size_t n : problem.candidates()) {
    out.rates[n] = uplink_rate(n, decision, out.c, problem.gains(), s.radio,
                               problem.powers());
  }
  finish_outcome(out, problem, CpuObjective::kEqualSplit);
  return out;
}

}  // namespace mecsim
