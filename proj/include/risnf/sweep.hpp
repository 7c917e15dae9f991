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

#include "risnf/channel.hpp"
#include "risnf/geometry.hpp"
#include "risnf/optimizer.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace risnf
{

enum class Placement
{
    Midpoints, // z_i = min + (i + 1/2) (max - min) / count, endpoints excluded
    Endpoints  // inclusive linspace from min to max
};

struct SweepRange
{
    double z_min = 0.0;
    double z_max = 0.0;
    std::size_t count = 1;
    Placement placement = Placement::Midpoints;

    friend bool operator==(const SweepRange &, const SweepRange &) = default;
};

std::vector<double> sweep_positions(const SweepRange &range);

/// One complete experiment: physics, terminals, panel template, sweep grid and
/// optimizer settings. Powers are in watts, lengths in meters, gains linear.
struct ScenarioConfig
{
    PhysicalParams physics;
    PlanarArray tx; // spacing is taken from the study spacing unless tx_spacing_lambda is set
    PlanarArray rx;
    std::optional<double> tx_spacing_lambda;
    std::optional<double> rx_spacing_lambda;
    RisPanel panel; // z is replaced by each swept position
    SweepRange sweep;
    std::vector<double> spacings_lambda;
    AltOptConfig optimizer;
    double power = 0.0; // [W]
    double noise = 0.0; // [W]
    bool include_baseline = true;

    friend bool operator==(const ScenarioConfig &, const ScenarioConfig &) = default;
};

/// Throws std::invalid_argument naming the offending field.
void validate(const ScenarioConfig &cfg);

struct TerminalArrays
{
    PlanarArray tx;
    PlanarArray rx;
};

TerminalArrays arrays_for_spacing(const ScenarioConfig &cfg, double spacing_lambda);

/// Panel template moved so that element (0, 0) sits at height z.
RisPanel panel_at(const ScenarioConfig &cfg, double z);

/// Seed used for the multi-start draw at RIS height z. Keyed on the coordinate,
/// so a single-point evaluation reproduces the matching sweep row regardless of
/// its index or evaluation order.
std::uint64_t position_seed(std::uint64_t base_seed, double z);

struct SingularValueStats
{
    double variance = 0.0; // population variance
    std::size_t dof = 0;   // streams with positive power
};

/// Throws std::invalid_argument on an empty sequence.
SingularValueStats singular_value_stats(std::span<const double> values, std::span<const double> powers = {});

struct FresnelStatus
{
    FresnelBounds bounds;
    double tx_distance = 0.0; // from the panel centroid to the Tx array centre
    double rx_distance = 0.0;
    bool tx_inside = false;
    bool rx_inside = false;

    bool both_inside() const { return tx_inside && rx_inside; }
};

FresnelStatus fresnel_status(const ScenarioConfig &cfg, const TerminalArrays &arrays, double z);

struct SweepRecord
{
    double z = 0.0;
    bool ok = false;
    std::string error; // set when !ok

    double capacity = 0.0;
    std::vector<double> singular_values;
    double variance = 0.0;
    std::vector<double> powers;
    std::size_t dof = 0;
    Convergence status = Convergence::Gamma;
    std::size_t iterations = 0;
    double wall_seconds = 0.0;
    FresnelStatus fresnel;

    CVector beta;
    CMatrix covariance;
};

struct BaselineRecord
{
    double spacing_lambda = 0.0;
    double capacity = 0.0;
    std::vector<double> singular_values;
    std::vector<double> powers;
    std::size_t dof = 0;
};

struct SweepOptions
{
    std::size_t jobs = 1; // 0 picks the hardware concurrency
    std::function<void(std::string_view)> on_warning;
};

/// Optimizes the RIS at height z. Channel-construction failures are captured in
/// the record rather than thrown.
SweepRecord evaluate_position(const ScenarioConfig &cfg, double spacing_lambda, double z);

/// One record per swept position, ordered by z as generated by the sweep range.
std::vector<SweepRecord> run_position_sweep(const ScenarioConfig &cfg, double spacing_lambda,
                                            const SweepOptions &options = {});

/// Direct-link capacity with no RIS present. Throws ChannelError on coincident antennas.
BaselineRecord run_los_baseline(const ScenarioConfig &cfg, double spacing_lambda);

struct SpacingResult
{
    double spacing_lambda = 0.0;
    std::optional<BaselineRecord> baseline;
    std::vector<SweepRecord> sweep;
    std::optional<std::size_t> argmax; // index of the best successful record

    const SweepRecord *best() const { return argmax ? &sweep[*argmax] : nullptr; }
};

struct CampaignResult
{
    std::vector<SpacingResult> spacings;

    std::size_t failed_positions() const;
    std::size_t total_positions() const;
};

/// Index of the highest-capacity successful record, lowest index on ties.
std::optional<std::size_t> argmax_capacity(std::span<const SweepRecord> records);

/// All spacings times all positions, evaluated on one shared worker pool.
CampaignResult run_campaign(const ScenarioConfig &cfg, const SweepOptions &options = {});

} // namespace risnf
