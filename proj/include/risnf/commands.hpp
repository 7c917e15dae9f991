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

#include "risnf/config.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace risnf::cli
{

inline constexpr int exit_ok = 0;
inline constexpr int exit_config_error = 2;
inline constexpr int exit_total_failure = 3;

/// Options shared by every subcommand. Exactly one of config_path / preset is set.
struct CommonArgs
{
    std::optional<std::string> config_path;
    std::optional<std::string> preset;
    std::optional<std::uint64_t> seed;
    std::size_t jobs = 0; // 0: hardware concurrency
    std::vector<std::string> overrides; // key=value, applied in order
};

struct SweepArgs
{
    CommonArgs common;
    std::string out_dir;
    std::vector<double> spacings; // empty: take the list from the config
};

struct CapacityArgs
{
    CommonArgs common;
    double ris_z = 0.0;
    std::optional<double> spacing; // default: first configured spacing
};

struct BaselineArgs
{
    CommonArgs common;
    std::vector<double> spacings;
    std::optional<std::string> out_dir; // default: CSV on `out`
};

/// Resolves preset/config file, overrides, --seed and an optional spacing list
/// into the effective document. Throws ConfigError.
ConfigDocument resolve_document(const CommonArgs &args, const std::vector<double> &spacings = {});

int cmd_sweep(const SweepArgs &args, std::ostream &out, std::ostream &err);
int cmd_capacity(const CapacityArgs &args, std::ostream &out, std::ostream &err);
int cmd_baseline(const BaselineArgs &args, std::ostream &out, std::ostream &err);

} // namespace risnf::cli
