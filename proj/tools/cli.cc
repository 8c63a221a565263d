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

#include "cli.h"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "mecsim/error.h"

namespace mecsim::cli {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

template <typename T>
T parse_token(std::string_view text) {
  text = trim(text);
  T value{};
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw std::invalid_argument("malformed number '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::string format_number(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  return fmt::format("{}", value);
}

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Resolves --scheme (possibly "proposed" or "all") plus --objective.
std::vector<Scheme> resolve_schemes(const std::string& text,
                                    const std::string& objective) {
  if (!objective.empty() && objective != "minmax" && objective != "minsum") {
    throw UsageError("--objective must be minmax or minsum");
  }
  std::vector<Scheme> schemes;
  bool objective_used = false;
  for (std::string_view token : split(text, ',')) {
    token = trim(token);
    if (token == "all") {
      if (!objective.empty()) throw UsageError("--objective conflicts with --scheme all");
      for (Scheme s : all_schemes()) schemes.push_back(s);
      continue;
    }
    if (token == "proposed") {
      schemes.push_back(objective == "minmax" ? Scheme::kProposedMinMax
                                              : Scheme::kProposedMinSum);
      objective_used = true;
      continue;
    }
    const auto scheme = parse_scheme(token);
    if (!scheme) throw UsageError("unknown scheme '" + std::string(token) + "'");
    if (!objective.empty()) {
      if (scheme_objective(*scheme) != objective) {
        throw UsageError("--objective " + objective + " conflicts with --scheme " +
                         std::string(token));
      }
      objective_used = true;
    }
    schemes.push_back(*scheme);
  }
  if (!objective.empty() && !objective_used) {
    throw UsageError("--objective requires a proposed scheme");
  }
  std::sort(schemes.begin(), schemes.end());
  schemes.erase(std::unique(schemes.begin(), schemes.end()), schemes.end());
  if (schemes.empty()) throw UsageError("no scheme selected");
  return schemes;
}

}  // namespace

std::vector<Scheme> all_schemes() {
  return {Scheme::kAllLocal, Scheme::kAllOffloadOrth, Scheme::kEqualCpu,
          Scheme::kProposedMinMax, Scheme::kProposedMinSum};
}

std::string_view scheme_name(Scheme scheme) {
  switch (scheme) {
    case Scheme::kAllLocal:
      return "all_local";
    case Scheme::kAllOffloadOrth:
      return "all_offload_orth";
    case Scheme::kEqualCpu:
      return "equal_cpu";
    case Scheme::kProposedMinMax:
      return "proposed_minmax";
    case Scheme::kProposedMinSum:
      return "proposed_minsum";
  }
  return "unknown";
}

std::optional<Scheme> parse_scheme(std::string_view name) {
  for (Scheme s : all_schemes()) {
    if (scheme_name(s) == name) return s;
  }
  return std::nullopt;
}

std::string_view scheme_objective(Scheme scheme) {
  switch (scheme) {
    case Scheme::kAllLocal:
      return "none";
    case Scheme::kAllOffloadOrth:
    case Scheme::kEqualCpu:
      return objective_name(CpuObjective::kEqualSplit);
    case Scheme::kProposedMinMax:
      return objective_name(CpuObjective::kMinMax);
    case Scheme::kProposedMinSum:
      return objective_name(CpuObjective::kMinSum);
  }
  return "unknown";
}

AllocationOutcome run_scheme(Scheme scheme, const Problem& problem) {
  switch (scheme) {
    case Scheme::kAllLocal:
      return run_baseline(Baseline::kAllLocal, problem);
    case Scheme::kAllOffloadOrth:
      return run_baseline(Baseline::kAllOffloadOrthogonal, problem);
    case Scheme::kEqualCpu:
      return run_baseline(Baseline::kEqualCpu, problem);
    case Scheme::kProposedMinMax:
      return run_proposed(problem, CpuObjective::kMinMax);
    case Scheme::kProposedMinSum:
      return run_proposed(problem, CpuObjective::kMinSum);
  }
  throw std::invalid_argument("unknown scheme");
}

RunRecord run_record(const ScenarioConfig& config, std::uint64_t seed,
                     Scheme scheme, bool timing, AllocationOutcome* outcome) {
  const auto start = std::chrono::steady_clock::now();
  Scenario scenario = build_scenario(config, seed);
  ChannelGains gains = channel_gains(scenario);
  const Problem problem(std::move(scenario), std::move(gains));
  AllocationOutcome result = run_scheme(scheme, problem);
  const auto stop = std::chrono::steady_clock::now();

  RunRecord record;
  record.seed = seed;
  record.n_cells = config.n_cells;
  record.scheme = scheme;
  record.lambda = config.reuse_lambda;
  record.system_overhead = result.system_overhead;
  record.n_offload = result.decision.num_offloading();
  double rate_sum = 0.0;
  for (std::size_t n : result.decision.offload_set()) rate_sum += result.rates[n];
  record.mean_rate_bps =
      record.n_offload > 0 ? rate_sum / static_cast<double>(record.n_offload) : 0.0;
  for (double f : result.cpu_hz) record.sum_cpu_assigned_hz += f;
  record.prb_slots_assigned = result.c.total();
  if (timing) {
    record.wall_time_ms =
        std::chrono::duration<double, std::milli>(stop - start).count();
  }
  if (outcome != nullptr) *outcome = std::move(result);
  return record;
}

const char kCsvHeader[] =
    "seed,n_cells,scheme,lambda,objective,system_overhead,n_offload,"
    "mean_rate_bps,sum_cpu_assigned_hz,prb_slots_assigned,wall_time_ms";

void write_csv_header(std::ostream& out) { out << kCsvHeader << '\n'; }

void write_csv_row(std::ostream& out, const RunRecord& r) {
  fmt::print(out, "{},{},{},{},{},{},{},{},{},{},{:.3f}\n", r.seed, r.n_cells,
             scheme_name(r.scheme), format_number(r.lambda),
             scheme_objective(r.scheme), format_number(r.system_overhead),
             r.n_offload, format_number(r.mean_rate_bps),
             format_number(r.sum_cpu_assigned_hz), r.prb_slots_assigned,
             r.wall_time_ms);
}

void write_prb_dump(std::ostream& out, const Scenario& scenario,
                    const AllocationOutcome& outcome) {
  out << "cell,x_m,y_m,offload,prb_count,prbs\n";
  for (std::size_t n = 0; n < scenario.size(); ++n) {
    std::string prbs;
    for (int k : outcome.c.prbs_of(n)) {
      if (!prbs.empty()) prbs += ';';
      prbs += std::to_string(k);
    }
    fmt::print(out, "{},{},{},{},{},{}\n", n,
               format_number(scenario.cells[n].position.x),
               format_number(scenario.cells[n].position.y),
               outcome.decision.offloads(n) ? 1 : 0, outcome.c.count(n), prbs);
  }
}

std::optional<SweepKey> parse_sweep_key(std::string_view name) {
  if (name == "cells") return SweepKey::kCells;
  if (name == "lambda") return SweepKey::kLambda;
  if (name == "mec_ghz") return SweepKey::kMecGhz;
  return std::nullopt;
}

void apply_sweep_value(ScenarioConfig& config, SweepKey key, double value) {
  switch (key) {
    case SweepKey::kCells:
      if (value != std::floor(value)) {
        throw InvalidConfig("cell count must be an integer");
      }
      config.n_cells = static_cast<int>(value);
      break;
    case SweepKey::kLambda:
      config.reuse_lambda = value;
      break;
    case SweepKey::kMecGhz:
      config.mec_ghz = value;
      break;
  }
  config.validate();
}

void run_sweep(const ScenarioConfig& config, const SweepSpec& spec,
               std::ostream& out) {
  std::vector<double> values = spec.values;
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::vector<std::uint64_t> seeds = spec.seeds;
  std::sort(seeds.begin(), seeds.end());
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
  std::vector<Scheme> schemes = spec.schemes;
  std::sort(schemes.begin(), schemes.end());
  schemes.erase(std::unique(schemes.begin(), schemes.end()), schemes.end());

  write_csv_header(out);
  for (double value : values) {
    ScenarioConfig varied = config;
    apply_sweep_value(varied, spec.key, value);
    for (std::uint64_t seed : seeds) {
      for (Scheme scheme : schemes) {
        write_csv_row(out, run_record(varied, seed, scheme, spec.timing));
      }
    }
  }
}

std::vector<std::uint64_t> parse_seeds(std::string_view text) {
  text = trim(text);
  std::vector<std::uint64_t> seeds;
  if (const auto dots = text.find(".."); dots != std::string_view::npos) {
    const auto first = parse_token<std::uint64_t>(text.substr(0, dots));
    const auto last = parse_token<std::uint64_t>(text.substr(dots + 2));
    for (std::uint64_t s = first; s <= last; ++s) {
      seeds.push_back(s);
      if (s == last) break;
    }
    return seeds;
  }
  if (text.empty()) return seeds;
  for (std::string_view token : split(text, ',')) {
    seeds.push_back(parse_token<std::uint64_t>(token));
  }
  return seeds;
}

std::vector<double> parse_values(std::string_view text) {
  std::vector<double> values;
  if (trim(text).empty()) return values;
  for (std::string_view token : split(text, ',')) {
    values.push_back(parse_token<double>(token));
  }
  return values;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"mecsim: edge-computing offloading and PRB allocation simulator"};
  app.require_subcommand(1);

  std::string config_path;
  std::string scheme_text = "proposed";
  std::string objective;
  std::string vary;
  std::string values_text;
  std::string output_path;
  std::string seeds_text;
  std::uint64_t seed = 0;
  bool detail = false;
  bool timing = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "Scenario config file (key = value)");
    sub->add_option("--objective", objective, "CPU objective: minmax or minsum");
    sub->add_option("--vary", vary, "Swept key: cells, lambda or mec_ghz");
    sub->add_option("--values", values_text, "Comma-separated values for --vary");
    sub->add_option("--output", output_path, "Write CSV here instead of stdout");
    sub->add_flag("--timing", timing, "Record wall time (output no longer reproducible)");
  };

  CLI::App* run = app.add_subcommand("run", "Run one scenario with one scheme");
  add_common(run);
  CLI::Option* seed_opt = run->add_option("--seed", seed, "Scenario seed");
  run->add_option("--scheme", scheme_text,
                  "proposed, proposed_minmax, proposed_minsum, all_local, "
                  "all_offload_orth or equal_cpu");
  run->add_flag("--detail", detail, "Also dump the per-cell PRB lists");

  CLI::App* sweep = app.add_subcommand("sweep", "Sweep one parameter over seeds and schemes");
  add_common(sweep);
  CLI::Option* sweep_seed_opt = sweep->add_option("--seed", seed, "Single seed");
  CLI::Option* seeds_opt = sweep->add_option("--seeds", seeds_text, "Seed range A..B or list");
  sweep->add_option("--scheme", scheme_text, "Comma-separated schemes or 'all'");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  ScenarioConfig config;
  try {
    if (!config_path.empty()) config = load_config(config_path);
  } catch (const InvalidConfig& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  }

  std::ofstream file;
  if (!output_path.empty()) {
    file.open(output_path, std::ios::out | std::ios::trunc | std::ios::binary);
    if (!file) {
      err << "error: cannot open output '" << output_path << "'\n";
      return kUsageError;
    }
  }
  std::ostream& sink = output_path.empty() ? out : file;

  try {
    std::optional<SweepKey> key;
    std::vector<double> values;
    if (!vary.empty() || !values_text.empty()) {
      if (vary.empty() || values_text.empty()) {
        throw UsageError("--vary and --values must be given together");
      }
      key = parse_sweep_key(vary);
      if (!key) throw UsageError("unknown --vary key '" + vary + "'");
      try {
        values = parse_values(values_text);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      if (values.empty()) throw UsageError("--values is empty");
    }
    const std::vector<Scheme> schemes = resolve_schemes(scheme_text, objective);

    if (run->parsed()) {
      if (schemes.size() != 1) throw UsageError("run takes exactly one scheme");
      if (key && values.size() != 1) throw UsageError("run takes a single --values entry");
      if (key) apply_sweep_value(config, *key, values.front());
      const std::uint64_t run_seed = seed_opt->count() > 0 ? seed : config.seed;
      AllocationOutcome outcome;
      const RunRecord record = run_record(config, run_seed, schemes.front(), timing, &outcome);
      write_csv_header(sink);
      write_csv_row(sink, record);
      if (detail) {
        sink << '\n';
        write_prb_dump(sink, build_scenario(config, run_seed), outcome);
      }
      return kOk;
    }

    if (!key) throw UsageError("sweep requires --vary and --values");
    if (sweep_seed_opt->count() > 0 && seeds_opt->count() > 0) {
      throw UsageError("--seed and --seeds are mutually exclusive");
    }
    SweepSpec spec;
    spec.key = *key;
    spec.values = values;
    spec.schemes = schemes;
    spec.timing = timing;
    if (seeds_opt->count() > 0) {
      try {
        spec.seeds = parse_seeds(seeds_text);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    } else {
      spec.seeds = {sweep_seed_opt->count() > 0 ? seed : config.seed};
    }
    if (spec.seeds.empty()) throw UsageError("seed list is empty");
    run_sweep(config, spec, sink);
    return kOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const InvalidConfig& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  }
}

}  // namespace mecsim::cli
