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

#ifndef MECSIM_TOOLS_CLI_H_
#define MECSIM_TOOLS_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mecsim/config.h"
#include "mecsim/decision_engine.h"

namespace mecsim::cli {

// Alphabetical, which is also the CSV row order within a (value, seed) group.
enum class Scheme {
  kAllLocal,
  kAllOffloadOrth,
  kEqualCpu,
  kProposedMinMax,
  kProposedMinSum,
};

std::vector<Scheme> all_schemes();
std::string_view scheme_name(Scheme scheme);
std::optional<Scheme> parse_scheme(std::string_view name);
// "minmax", "minsum", "equal" or "none".
std::string_view scheme_objective(Scheme scheme);

struct RunRecord {
  std::uint64_t seed = 0;
  int n_cells = 0;
  Scheme scheme = Scheme::kProposedMinSum;
  double lambda = 0.0;
  double system_overhead = 0.0;
  std::size_t n_offload = 0;
  double mean_rate_bps = 0.0;
  double sum_cpu_assigned_hz = 0.0;
  int prb_slots_assigned = 0;
  double wall_time_ms = 0.0;
};

AllocationOutcome run_scheme(Scheme scheme, const Problem& problem);

// Builds the scenario for (config, seed) and runs one scheme. Wall time is
// recorded only when `timing` is set so that default output is reproducible.
RunRecord run_record(const ScenarioConfig& config, std::uint64_t seed,
                     Scheme scheme, bool timing = false,
                     AllocationOutcome* outcome = nullptr);

extern const char kCsvHeader[];
void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const RunRecord& record);

// Per-cell PRB lists of an outcome (the reuse pattern).
void write_prb_dump(std::ostream& out, const Scenario& scenario,
                    const AllocationOutcome& outcome);

enum class SweepKey { kCells, kLambda, kMecGhz };

std::optional<SweepKey> parse_sweep_key(std::string_view name);
void apply_sweep_value(ScenarioConfig& config, SweepKey key, double value);

struct SweepSpec {
  SweepKey key = SweepKey::kCells;
  std::vector<double> values;
  std::vector<std::uint64_t> seeds;
  std::vector<Scheme> schemes;
  bool timing = false;
};

// One row per (value, seed, scheme) in ascending lexicographic order.
void run_sweep(const ScenarioConfig& config, const SweepSpec& spec,
               std::ostream& out);

// "A..B" (inclusive), a comma list, or a single seed. Throws
// std::invalid_argument on malformed input.
std::vector<std::uint64_t> parse_seeds(std::string_view text);
std::vector<double> parse_values(std::string_view text);

enum ExitCode { kOk = 0, kConfigError = 2, kUsageError = 3 };

// Entry point for the mecsim binary. Writes CSV to `out` unless --output is
// given, diagnostics to `err`.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mecsim::cli

#endif  // MECSIM_TOOLS_CLI_H_
