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

#include "risnf/commands.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace
{

void add_common(CLI::App *cmd, risnf::cli::CommonArgs &args)
{
    cmd->add_option("--config", args.config_path, "Scenario file (JSON)");
    cmd->add_option("--preset", args.preset, "Built-in scenario: paper-full or paper-small");
    cmd->add_option("--seed", args.seed, "Override optimizer.seed");
    cmd->add_option("--jobs", args.jobs, "Worker threads, 0 for all cores")->default_val(0);
    cmd->add_option("--set", args.overrides, "Config override key=value (dotted keys, repeatable)");
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Near-field RIS placement and capacity simulator"};
    app.require_subcommand(1);
    app.set_version_flag("--version", RISNF_VERSION);

    risnf::cli::SweepArgs sweep;
    auto *sweep_cmd = app.add_subcommand("sweep", "Sweep the RIS height for every spacing, write CSV + manifest");
    add_common(sweep_cmd, sweep.common);
    sweep_cmd->add_option("--out", sweep.out_dir, "Output directory")->required();
    sweep_cmd->add_option("--spacing", sweep.spacings, "Inter-antenna spacings in wavelengths")->delimiter(',');

    risnf::cli::CapacityArgs capacity;
    auto *capacity_cmd = app.add_subcommand("capacity", "Optimize a single RIS placement, print JSON");
    add_common(capacity_cmd, capacity.common);
    capacity_cmd->add_option("--ris-z", capacity.ris_z, "z of RIS element (0, 0) in meters")->required();
    capacity_cmd->add_option("--spacing", capacity.spacing, "Inter-antenna spacing in wavelengths");

    risnf::cli::BaselineArgs baseline;
    auto *baseline_cmd = app.add_subcommand("baseline", "Direct LoS MIMO capacity per spacing, no RIS");
    add_common(baseline_cmd, baseline.common);
    baseline_cmd->add_option("--spacing", baseline.spacings, "Inter-antenna spacings in wavelengths")->delimiter(',');
    baseline_cmd->add_option("--out", baseline.out_dir, "Write baseline.csv + manifest.json here instead of stdout");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e);
        return code == 0 ? 0 : risnf::cli::exit_config_error;
    }

    if (*sweep_cmd)
        return risnf::cli::cmd_sweep(sweep, std::cout, std::cerr);
    if (*capacity_cmd)
        return risnf::cli::cmd_capacity(capacity, std::cout, std::cerr);
    return risnf::cli::cmd_baseline(baseline, std::cout, std::cerr);
}
