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

#ifndef MECSIM_CONFIG_H_
#define MECSIM_CONFIG_H_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "mecsim/scenario.h"

namespace mecsim {

// Config files are flat "key = value" lines. '#' starts a comment and blank
// lines are ignored. Unknown keys and malformed numbers raise InvalidConfig.
ScenarioConfig parse_config(std::istream& in);
ScenarioConfig load_config(const std::string& path);

void apply_setting(ScenarioConfig& config, std::string_view key,
                   std::string_view value);

std::vector<std::string> config_keys();

// Writes every key in config_keys() order; parse_config reads it back.
void write_config(std::ostream& out, const ScenarioConfig& config);

}  // namespace mecsim

#endif  // MECSIM_CONFIG_H_
