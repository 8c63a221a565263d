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

#include "mecsim/config.h"

#include <array>
#include <charconv>
#include <fstream>
#include <functional>
#include <istream>
#include <ostream>
#include <string>

#include "mecsim/error.h"

namespace mecsim {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(std::string_view key, std::string_view text) {
  T value{};
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw InvalidConfig("bad value for '" + std::string(key) + "': '" +
                        std::string(text) + "'");
  }
  return value;
}

template <typename T>
std::string format_number(T value) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ptr);
}

struct Field {
  std::string_view key;
  std::function<void(ScenarioConfig&, std::string_view)> set;
  std::function<std::string(const ScenarioConfig&)> get;
};

template <typename T>
Field field(std::string_view key, T ScenarioConfig::*member) {
  return {key,
          [key, member](ScenarioConfig& c, std::string_view v) {
            c.*member = parse_number<T>(key, v);
          },
          [member](const ScenarioConfig& c) { return format_number(c.*member); }};
}

const std::vector<Field>& fields() {
  static const std::vector<Field> kFields = {
      field("n_cells", &ScenarioConfig::n_cells),
      field("area_m", &ScenarioConfig::area_m),
      field("ue_radius_m", &ScenarioConfig::ue_radius_m),
      field("min_distance_m", &ScenarioConfig::min_distance_m),
      field("bandwidth_hz", &ScenarioConfig::bandwidth_hz),
      field("num_prbs", &ScenarioConfig::num_prbs),
      field("noise_dbm", &ScenarioConfig::noise_dbm),
      field("tx_power_mw", &ScenarioConfig::tx_power_mw),
      field("input_kb", &ScenarioConfig::input_kb),
      field("bytes_per_kb", &ScenarioConfig::bytes_per_kb),
      field("task_megacycles", &ScenarioConfig::task_megacycles),
      field("local_ghz", &ScenarioConfig::local_ghz),
      field("mec_ghz", &ScenarioConfig::mec_ghz),
      field("gamma_t", &ScenarioConfig::gamma_t),
      field("gamma_e", &ScenarioConfig::gamma_e),
      field("energy_coeff_j_per_cycle", &ScenarioConfig::energy_coeff_j_per_cycle),
      field("reuse_lambda", &ScenarioConfig::reuse_lambda),
      field("edge_threshold", &ScenarioConfig::edge_threshold),
      field("pl0_db", &ScenarioConfig::pl0_db),
      field("pl_exponent", &ScenarioConfig::pl_exponent),
      field("shadowing_db", &ScenarioConfig::shadowing_db),
      field("seed", &ScenarioConfig::seed),
  };
  return kFields;
}

}  // namespace

void apply_setting(ScenarioConfig& config, std::string_view key,
                   std::string_view value) {
  for (const Field& f : fields()) {
    if (f.key == key) {
      f.set(config, trim(value));
      return;
    }
  }
  throw InvalidConfig("unknown config key '" + std::string(key) + "'");
}

ScenarioConfig parse_config(std::istream& in) {
  ScenarioConfig config;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (const auto hash = view.find('#'); hash != std::string_view::npos) {
      view = view.substr(0, hash);
    }
    view = trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw InvalidConfig("line " + std::to_string(line_no) +
                          ": expected 'key = value'");
    }
    apply_setting(config, trim(view.substr(0, eq)), view.substr(eq + 1));
  }
  config.validate();
  return config;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidConfig("cannot open config file '" + path + "'");
  return parse_config(in);
}

std::vector<std::string> config_keys() {
  std::vector<std::string> keys;
  for (const Field& f : fields()) keys.emplace_back(f.key);
  return keys;
}

void write_config(std::ostream& out, const ScenarioConfig& config) {
  for (const Field& f : fields()) {
    out << f.key << " = " << f.get(config) << '\n';
  }
}

}  // namespace mecsim
