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

#include "mecsim/cpu_allocation.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "mecsim/error.h"

namespace mecsim {
namespace {

// Rounding slack when comparing summed lower bounds against the budget.
constexpr double kBudgetSlack = 1e-12;

void require_feasible(std::span<const CpuRequest> requests, double capacity_hz) {
  if (requests.empty()) throw InfeasibleAllocation("no requests");
  if (!feasible(requests, capacity_hz)) {
    throw InfeasibleAllocation("deadline caps exceed server capacity");
  }
}

// Shared pinning loop: `share(active, budget)` proposes an allocation for the
// active requests; any request proposed below its lower bound is pinned to
// that bound and the rest re-solved on the remaining budget.
std::vector<double> pin_and_solve(
    std::span<const CpuRequest> requests, double capacity_hz,
    const std::function<std::vector<double>(const std::vector<std::size_t>&,
                                            double)>& share) {
  std::vector<double> f(requests.size(), 0.0);
  std::vector<std::size_t> active(requests.size());
  std::iota(active.begin(), active.end(), 0);
  double budget = capacity_hz;

  while (!active.empty()) {
    const std::vector<double> proposal = share(active, budget);
    std::vector<std::size_t> keep;
    double pinned = 0.0;
    for (std::size_t i = 0; i < active.size(); ++i) {
      const CpuRequest& r = requests[active[i]];
      if (proposal[i] < r.lower_bound_hz()) {
        f[active[i]] = r.lower_bound_hz();
        pinned += r.lower_bound_hz();
      } else {
        keep.push_back(active[i]);
      }
    }
    if (keep.size() == active.size()) {
      for (std::size_t i = 0; i < active.size(); ++i) f[active[i]] = proposal[i];
      return f;
    }
    budget -= pinned;
    active = std::move(keep);
  }

  // Every request pinned: only reachable at the feasibility boundary.
  // Spread any rounding leftover in proportion to the pinned shares.
  const double used = std::accumulate(f.begin(), f.end(), 0.0);
  if (used > 0) {
    for (double& x : f) x *= capacity_hz / used;
  }
  return f;
}

}  // namespace

std::string_view objective_name(CpuObjective objective) {
  switch (objective) {
    case CpuObjective::kMinMax:
      return "minmax";
    case CpuObjective::kMinSum:
      return "minsum";
    case CpuObjective::kEqualSplit:
      return "equal";
  }
  return "unknown";
}

bool feasible(std::span<const CpuRequest> requests, double capacity_hz) {
  double needed = 0.0;
  for (const CpuRequest& r : requests) {
    if (!(r.t_cap_s > 0)) return false;
    needed += r.lower_bound_hz();
  }
  return needed <= capacity_hz * (1.0 + kBudgetSlack);
}

double max_exec_time(std::span<const CpuRequest> requests,
                     std::span<const double> f) {
  double worst = 0.0;
  for (std::size_t i = 0; i < requests.size(); ++i) {
    worst = std::max(worst, requests[i].cycles / f[i]);
  }
  return worst;
}

double sum_exec_time(std::span<const CpuRequest> requests,
                     std::span<const double> f) {
  double total = 0.0;
  for (std::size_t i = 0; i < requests.size(); ++i) {
    total += requests[i].cycles / f[i];
  }
  return total;
}

CpuAllocation allocate_minmax(std::span<const CpuRequest> requests,
                              double capacity_hz) {
  require_feasible(requests, capacity_hz);
  auto equalize = [&](const std::vector<std::size_t>& active, double budget) {
    double cycles = 0.0;
    for (std::size_t i : active) cycles += requests[i].cycles;
    const double tau = cycles / budget;
    std::vector<double> out;
    out.reserve(active.size());
    for (std::size_t i : active) out.push_back(requests[i].cycles / tau);
    return out;
  };
  CpuAllocation alloc;
  alloc.f = pin_and_solve(requests, capacity_hz, equalize);
  alloc.objective = max_exec_time(requests, alloc.f);
  return alloc;
}

CpuAllocation allocate_minsum(std::span<const CpuRequest> requests,
                              double capacity_hz) {
  require_feasible(requests, capacity_hz);
  auto sqrt_rule = [&](const std::vector<std::size_t>& active, double budget) {
    double root_sum = 0.0;
    for (std::size_t i : active) root_sum += std::sqrt(requests[i].cycles);
    std::vector<double> out;
    out.reserve(active.size());
    for (std::size_t i : active) {
      out.push_back(budget * std::sqrt(requests[i].cycles) / root_sum);
    }
    return out;
  };
  CpuAllocation alloc;
  alloc.f = pin_and_solve(requests, capacity_hz, sqrt_rule);
  alloc.objective = sum_exec_time(requests, alloc.f);
  return alloc;
}

CpuAllocation allocate_equal(std::span<const CpuRequest> requests,
                             double capacity_hz) {
  if (requests.empty()) throw InfeasibleAllocation("no requests");
  const double each = capacity_hz / static_cast<double>(requests.size());
  for (const CpuRequest& r : requests) {
    if (!(r.t_cap_s > 0) || r.cycles / each > r.t_cap_s * (1.0 + kBudgetSlack)) {
      throw InfeasibleAllocation("equal split misses a deadline cap");
    }
  }
  CpuAllocation alloc;
  alloc.f.assign(requests.size(), each);
  alloc.objective = sum_exec_time(requests, alloc.f);
  return alloc;
}

CpuAllocation allocate(CpuObjective objective,
                       std::span<const CpuRequest> requests,
                       double capacity_hz) {
  switch (objective) {
    case CpuObjective::kMinMax:
      return allocate_minmax(requests, capacity_hz);
    case CpuObjective::kMinSum:
      return allocate_minsum(requests, capacity_hz);
    case CpuObjective::kEqualSplit:
      return allocate_equal(requests, capacity_hz);
  }
  throw InfeasibleAllocation("unknown objective");
}

}  // namespace mecsim
