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

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace risnf
{

/// 17 significant digits, the shortest width that round-trips every double.
std::string format_double(double v);

/// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_escape(const std::string &field);

/// z_m, capacity_bps_hz, sigma_1..sigma_K, sv_variance, dof, power_1_w..power_K_w,
/// iterations, converged, status, error
std::vector<std::string> sweep_csv_header(std::size_t streams);

/// spacing_lambda, capacity_bps_hz, sigma_1..sigma_K, power_1_w..power_K_w, dof
std::vector<std::string> baseline_csv_header(std::size_t streams);

/// spacing_lambda, best_z_m, best_capacity_bps_hz, best_dof, los_capacity_bps_hz, los_dof, failed_positions
std::vector<std::string> summary_csv_header();

void write_sweep_csv(std::ostream &out, std::span<const SweepRecord> records, std::size_t streams);
void write_baseline_csv(std::ostream &out, std::span<const BaselineRecord> records, std::size_t streams);
void write_summary_csv(std::ostream &out, const CampaignResult &campaign);

/// Directory name used for one spacing's outputs, e.g. "spacing_2lambda".
std::string spacing_label(double spacing_lambda);

} // namespace risnf
