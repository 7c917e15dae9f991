// SPDX-License-Identifier: Apache-2.0
//
// risnf - near-field RIS placement and capacity simulator
// Copyright (C) 2026 The risnf authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include "risnf/sweep.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace risnf
{

/// Malformed or inconsistent scenario configuration. The message names the
/// offending field or the line/column of a syntax error.
class ConfigError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// Scenario file contents after presets and overrides are applied, before unit
/// conversion. This is what a run manifest echoes back.
using ConfigDocument = nlohmann::json;

/// Parses JSON text. Syntax errors are reported with line and column.
ConfigDocument parse_config_text(std::string_view text);
ConfigDocument load_config_file(const std::string &path);

/// Names accepted by preset_document.
std::vector<std::string> preset_names();

/// Built-in scenarios: "paper-full" and "paper-small".
ConfigDocument preset_document(std::string_view name);

/// Applies a dotted-path override such as "optimizer.seed=7" or "power_w=0". The
/// value is read as JSON when it parses, otherwise as a string.
void apply_override(ConfigDocument &doc, std::string_view assignment);

/// Converts units and builds the scenario. dBm/dBi/lambda-relative quantities
/// are turned into watts, linear gains and meters here and nowhere else.
/// Unknown keys are rejected.
ScenarioConfig to_scenario(const ConfigDocument &doc);

/// 64-bit FNV-1a over the compact serialization, as 16 hex digits.
std::string config_checksum(const ConfigDocument &doc);

double dbm_to_watts(double dbm);
double db_to_linear(double db);

} // namespace risnf
