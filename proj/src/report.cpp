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

#include "risnf/report.hpp"

#include <charconv>
#include <ostream>
#include <stdexcept>

namespace risnf
{

namespace
{

void write_row(std::ostream &out, const std::vector<std::string> &fields)
{
    for (std::size_t i = 0; i < fields.size(); ++i)
        out << (i ? "," : "") << fields[i];
    out << '\n';
}

void append_padded(std::vector<std::string> &row, const std::vector<double> &values, std::size_t width)
{
    for (std::size_t i = 0; i < width; ++i)
        row.push_back(i < values.size() ? format_double(values[i]) : std::string());
}

} // namespace

std::string format_double(double v)
{
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    if (ec != std::errc())
        throw std::runtime_error("format_double: conversion failed");
    return std::string(buf, end);
}

std::string csv_escape(const std::string &field)
{
    if (field.find_first_of(",\"\n\r") == std::string::npos)
        return field;
    std::string out = "\"";
    for (char c : field)
    {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

std::vector<std::string> sweep_csv_header(std::size_t streams)
{
    std::vector<std::string> h{"z_m", "capacity_bps_hz"};
    for (std::size_t i = 1; i <= streams; ++i)
        h.push_back("sigma_" + std::to_string(i));
    h.push_back("sv_variance");
    h.push_back("dof");
    for (std::size_t i = 1; i <= streams; ++i)
        h.push_back("power_" + std::to_string(i) + "_w");
    h.insert(h.end(), {"iterations", "converged", "status", "error"});
    return h;
}

std::vector<std::string> baseline_csv_header(std::size_t streams)
{
    std::vector<std::string> h{"spacing_lambda", "capacity_bps_hz"};
    for (std::size_t i = 1; i <= streams; ++i)
        h.push_back("sigma_" + std::to_string(i));
    for (std::size_t i = 1; i <= streams; ++i)
        h.push_back("power_" + std::to_string(i) + "_w");
    h.push_back("dof");
    return h;
}

std::vector<std::string> summary_csv_header()
{
    return {"spacing_lambda", "best_z_m",  "best_capacity_bps_hz", "best_dof",
            "los_capacity_bps_hz", "los_dof", "failed_positions"};
}

void write_sweep_csv(std::ostream &out, std::span<const SweepRecord> records, std::size_t streams)
{
    write_row(out, sweep_csv_header(streams));
    for (const auto &r : records)
    {
        std::vector<std::string> row{format_double(r.z)};
        if (r.ok)
        {
            row.push_back(format_double(r.capacity));
            append_padded(row, r.singular_values, streams);
            row.push_back(format_double(r.variance));
            row.push_back(std::to_string(r.dof));
            append_padded(row, r.powers, streams);
            row.push_back(std::to_string(r.iterations));
            row.push_back(r.status == Convergence::Gamma ? "1" : "0");
            row.push_back("ok");
            row.push_back("");
        }
        else
        {
            row.resize(row.size() + 1 + streams + 2 + streams + 2);
            row.push_back("failed");
            row.push_back(csv_escape(r.error));
        }
        write_row(out, row);
    }
}

void write_baseline_csv(std::ostream &out, std::span<const BaselineRecord> records, std::size_t streams)
{
    write_row(out, baseline_csv_header(streams));
    for (const auto &r : records)
    {
        std::vector<std::string> row{format_double(r.spacing_lambda), format_double(r.capacity)};
        append_padded(row, r.singular_values, streams);
        append_padded(row, r.powers, streams);
        row.push_back(std::to_string(r.dof));
        write_row(out, row);
    }
}

void write_summary_csv(std::ostream &out, const CampaignResult &campaign)
{
    write_row(out, summary_csv_header());
    for (const auto &s : campaign.spacings)
    {
        std::vector<std::string> row{format_double(s.spacing_lambda)};
        if (const SweepRecord *best = s.best())
        {
            row.push_back(format_double(best->z));
            row.push_back(format_double(best->capacity));
            row.push_back(std::to_string(best->dof));
        }
        else
            row.insert(row.end(), {"", "", ""});
        if (s.baseline)
        {
            row.push_back(format_double(s.baseline->capacity));
            row.push_back(std::to_string(s.baseline->dof));
        }
        else
            row.insert(row.end(), {"", ""});
        std::size_t failed = 0;
        for (const auto &r : s.sweep)
            failed += r.ok ? 0 : 1;
        row.push_back(std::to_string(failed));
        write_row(out, row);
    }
}

std::string spacing_label(double spacing_lambda)
{
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, spacing_lambda);
    std::string s(buf, ec == std::errc() ? end : buf);
    for (char &c : s)
        if (c == '.')
            c = 'p';
    return "spacing_" + s + "lambda";
}

} // namespace risnf
