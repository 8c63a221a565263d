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

#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "mecsim/error.h"
#include "oracles.h"

namespace mecsim {
namespace {

using testing::rel_diff;

constexpr double kInf = std::numeric_limits<double>::infinity();

double total(const std::vector<double>& f) {
  return std::accumulate(f.begin(), f.end(), 0.0);
}

TEST(FeasibleTest, Boundaries) {
  const std::vector<CpuRequest> nonpositive = {{0, 1e9, 0.0}, {1, 1e9, kInf}};
  EXPECT_FALSE(feasible(nonpositive, 1e10));
  // Each request needs exactly half the capacity.
  const std::vector<CpuRequest> exact = {{0, 1e9, 0.2}, {1, 2e9, 0.4}};
  EXPECT_TRUE(feasible(exact, 1e10));
  const std::vector<CpuRequest> over = {{0, 1.01e9, 0.2}, {1, 2.02e9, 0.4}};
  EXPECT_FALSE(feasible(over, 1e10));
}

TEST(MinMaxTest, LooseCapsEqualize) {
  const std::vector<CpuRequest> r = {{0, 1e9, kInf}, {1, 4e9, kInf}};
  const CpuAllocation a = allocate_minmax(r, 5e9);
  EXPECT_NEAR(a.f[0], 1e9, 1e-3);
  EXPECT_NEAR(a.f[1], 4e9, 1e-3);
  EXPECT_NEAR(a.objective, 1.0, 1e-15);
}

TEST(MinMaxTest, EqualCyclesEqualSplit) {
  const std::vector<CpuRequest> r = {{0, 2e9, kInf}, {1, 2e9, 10.0}, {2, 2e9, kInf}};
  const CpuAllocation a = allocate_minmax(r, 9e9);
  for (double f : a.f) EXPECT_NEAR(f, 3e9, 1e-3);
}

TEST(MinMaxTest, BindingCapIsPinned) {
  // Unconstrained time 2/3 s breaks the 0.4 s cap: 2.5 GHz pinned, the other
  // request gets the remaining 0.5 GHz and finishes at 2 s.
  const std::vector<CpuRequest> r = {{0, 1e9, 0.4}, {1, 1e9, kInf}};
  const CpuAllocation a = allocate_minmax(r, 3e9);
  EXPECT_NEAR(a.f[0], 2.5e9, 1e-3);
  EXPECT_NEAR(a.f[1], 0.5e9, 1e-3);
  EXPECT_NEAR(a.objective, 2.0, 1e-12);
  EXPECT_NEAR(testing::grid_minmax(r, 3e9), 2.0, 2e-4);
}

TEST(MinMaxTest, InfeasibleThrows) {
  const std::vector<CpuRequest> r = {{0, 1e9, 0.1}, {1, 1e9, 0.1}};
  EXPECT_THROW(allocate_minmax(r, 1e10), InfeasibleAllocation);
  EXPECT_THROW(allocate_minsum(r, 1e10), InfeasibleAllocation);
  EXPECT_THROW(allocate_equal(r, 1e10), InfeasibleAllocation);
}

TEST(MinSumTest, SquareRootRule) {
  const std::vector<CpuRequest> r = {{0, 1e9, kInf}, {1, 4e9, kInf}};
  const CpuAllocation a = allocate_minsum(r, 3e9);
  EXPECT_NEAR(a.f[0], 1e9, 1e-3);
  EXPECT_NEAR(a.f[1], 2e9, 1e-3);
  EXPECT_NEAR(a.objective, 3.0, 1e-14);
  EXPECT_NEAR(testing::grid_minsum(r, 3e9), 3.0, 3e-4);
}

TEST(MinSumTest, SingleRequestTakesEverything) {
  const std::vector<CpuRequest> r = {{4, 7e9, 100.0}};
  const CpuAllocation a = allocate_minsum(r, 20e9);
  EXPECT_DOUBLE_EQ(a.f[0], 20e9);
  EXPECT_DOUBLE_EQ(a.objective, 7e9 / 20e9);
}

TEST(MinSumTest, EqualCyclesEqualSplit) {
  const std::vector<CpuRequest> r = {{0, 3e9, kInf}, {1, 3e9, kInf}};
  const CpuAllocation a = allocate_minsum(r, 8e9);
  EXPECT_NEAR(a.f[0], 4e9, 1e-3);
  EXPECT_NEAR(a.f[1], 4e9, 1e-3);
}

TEST(EqualSplitTest, ChecksCaps) {
  const std::vector<CpuRequest> r = {{0, 1e9, 1.0}, {1, 1e9, 0.5}};
  const CpuAllocation a = allocate_equal(r, 4e9);
  EXPECT_DOUBLE_EQ(a.f[0], 2e9);
  EXPECT_DOUBLE_EQ(a.objective, 1.0);
  EXPECT_THROW(allocate_equal(r, 3e9), InfeasibleAllocation);
}

// Property checks over random instances, both objectives.
TEST(CpuAllocationPropertyTest, InvariantsAndOracles) {
  std::mt19937_64 rng(31337);
  const double capacity = 100e9;
  for (int trial = 0; trial < 60; ++trial) {
    const auto r = testing::random_cpu_instance(rng, 4, capacity, trial % 2 == 0);
    ASSERT_TRUE(feasible(r, capacity));
    const CpuAllocation mm = allocate_minmax(r, capacity);
    const CpuAllocation ms = allocate_minsum(r, capacity);
    double cycles = 0.0;
    for (const auto& q : r) cycles += q.cycles;
    for (const CpuAllocation* a : {&mm, &ms}) {
      EXPECT_LE(rel_diff(total(a->f), capacity), 1e-9);
      for (std::size_t i = 0; i < r.size(); ++i) {
        EXPECT_GT(a->f[i], 0.0);
        EXPECT_LE(r[i].cycles / a->f[i], r[i].t_cap_s * (1 + 1e-9));
      }
    }
    EXPECT_GE(mm.objective, cycles / capacity * (1 - 1e-12));
    EXPECT_LE(ms.objective, sum_exec_time(r, mm.f) * (1 + 1e-12));
    EXPECT_LE(rel_diff(mm.objective, testing::bisection_minmax(r, capacity)), 1e-9);
  }
}

}  // namespace
}  // namespace mecsim
