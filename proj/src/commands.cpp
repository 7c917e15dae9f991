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

#include "risnf/report.hpp"

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#ifndef RISNF_VERSION
#define RISNF_VERSION "0.0.0"
#endif

namespace risnf::cli
{

namespace fs = std::filesystem;
using nlohmann::json;

namespace
{

std::string utc_now()
{
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::size_t stream_count(const ScenarioConfig &cfg)
{
    return std::min(cfg.tx.size(), cfg.rx.size());
}

json common_parameters(const CommonArgs &args)
{
    json p;
    p["config_path"] = args.config_path ? json(*args.config_path) : json(nullptr);
    p["preset"] = args.preset ? json(*args.preset) : json(nullptr);
    p["jobs"] = args.jobs;
    p["overrides"] = args.overrides;
    return p;
}

json make_manifest(const std::string &command, const ConfigDocument &doc, const ScenarioConfig &cfg,
                   json parameters, const std::string &started, const std::vector<std::string> &outputs)
{
    json m;
    m["tool"] = "risnf";
    m["version"] = RISNF_VERSION;
    m["command"] = command;
    m["config_checksum"] = config_checksum(doc);
    m["seed"] = cfg.optimizer.seed;
    m["started_utc"] = started;
    m["finished_utc"] = utc_now();
    m["parameters"] = std::move(parameters);
    m["config"] = doc;
    m["outputs"] = outputs;
    return m;
}

void write_file(const fs::path &path, const std::string &contents)
{
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot write '" + path.string() + "'");
    f << contents;
}

template <typename Fn>
int guarded(std::ostream &err, Fn &&fn)
{
    try
    {
        return fn();
    }
    catch (const ConfigError &e)
    {
        err << "config error: " << e.what() << '\n';
        return exit_config_error;
    }
    catch (const std::exception &e)
    {
        err << "error: " << e.what() << '\n';
        return exit_total_failure;
    }
}

} // namespace

ConfigDocument resolve_document(const CommonArgs &args, const std::vector<double> &spacings)
{
    if (args.config_path.has_value() == args.preset.has_value())
        throw ConfigError("exactly one of --config or --preset is required");
    ConfigDocument doc = args.preset ? preset_document(*args.preset) : load_config_file(*args.config_path);
    for (const auto &o : args.overrides)
        apply_override(doc, o);
    if (args.seed)
        apply_override(doc, "optimizer.seed=" + std::to_string(*args.seed));
    if (!spacings.empty())
        doc["spacings_lambda"] = spacings;
    return doc;
}

int cmd_sweep(const SweepArgs &args, std::ostream &out, std::ostream &err)
{
    return guarded(err, [&] {
        const std::string started = utc_now();
        const ConfigDocument doc = resolve_document(args.common, args.spacings);
        const ScenarioConfig cfg = to_scenario(doc);

        SweepOptions options;
        options.jobs = args.common.jobs;
        options.on_warning = [&err](std::string_view msg) { err << "warning: " << msg << '\n'; };
        const CampaignResult campaign = run_campaign(cfg, options);

        const fs::path root(args.out_dir);
        fs::create_directories(root);
        const std::size_t streams = stream_count(cfg);
        std::vector<std::string> outputs;
        std::vector<BaselineRecord> baselines;
        for (const auto &s : campaign.spacings)
        {
            const fs::path dir = root / spacing_label(s.spacing_lambda);
            fs::create_directories(dir);
            std::ostringstream csv;
            write_sweep_csv(csv, s.sweep, streams);
            write_file(dir / "sweep.csv", csv.str());
            outputs.push_back((fs::path(spacing_label(s.spacing_lambda)) / "sweep.csv").string());
            if (s.baseline)
                baselines.push_back(*s.baseline);
        }
        if (cfg.include_baseline)
        {
            std::ostringstream csv;
            write_baseline_csv(csv, baselines, streams);
            write_file(root / "baseline.csv", csv.str());
            outputs.push_back("baseline.csv");
        }
        {
            std::ostringstream csv;
            write_summary_csv(csv, campaign);
            write_file(root / "summary.csv", csv.str());
            outputs.push_back("summary.csv");
        }

        json params = common_parameters(args.common);
        params["out"] = args.out_dir;
        params["spacings_lambda"] = cfg.spacings_lambda;
        outputs.push_back("manifest.json");
        write_file(root / "manifest.json", make_manifest("sweep", doc, cfg, params, started, outputs).dump(2) + "\n");

        const std::size_t failed = campaign.failed_positions();
        for (const auto &s : campaign.spacings)
        {
            out << spacing_label(s.spacing_lambda) << ": ";
            if (const SweepRecord *best = s.best())
                out << "best z = " << format_double(best->z) << " m, capacity = " << format_double(best->capacity)
                    << " bit/s/Hz, dof = " << best->dof;
            else
                out << "no successful position";
            if (s.baseline)
                out << "; LoS capacity = " << format_double(s.baseline->capacity) << ", dof = " << s.baseline->dof;
            out << '\n';
        }
        if (failed > 0)
            err << "warning: " << failed << " of " << campaign.total_positions() << " positions failed\n";
        return failed == campaign.total_positions() ? exit_total_failure : exit_ok;
    });
}

int cmd_capacity(const CapacityArgs &args, std::ostream &out, std::ostream &err)
{
    return guarded(err, [&] {
        const ConfigDocument doc = resolve_document(args.common);
        const ScenarioConfig cfg = to_scenario(doc);
        const double spacing = args.spacing.value_or(cfg.spacings_lambda.front());
        if (!(spacing > 0.0))
            throw ConfigError("--spacing must be positive");

        const SweepRecord rec = evaluate_position(cfg, spacing, args.ris_z);
        json j;
        j["ris_z_m"] = rec.z;
        j["spacing_lambda"] = spacing;
        j["seed"] = cfg.optimizer.seed;
        if (!rec.ok)
        {
            j["error"] = rec.error;
            out << j.dump(2) << '\n';
            err << "error: " << rec.error << '\n';
            return exit_total_failure;
        }
        j["capacity_bps_hz"] = rec.capacity;
        j["singular_values"] = rec.singular_values;
        j["sv_variance"] = rec.variance;
        j["dof"] = rec.dof;
        j["powers_w"] = rec.powers;
        j["iterations"] = rec.iterations;
        j["converged"] = rec.status == Convergence::Gamma;
        j["fresnel"] = {{"lower_m", rec.fresnel.bounds.lower},     {"upper_m", rec.fresnel.bounds.upper},
                        {"tx_distance_m", rec.fresnel.tx_distance}, {"rx_distance_m", rec.fresnel.rx_distance},
                        {"tx_inside", rec.fresnel.tx_inside},       {"rx_inside", rec.fresnel.rx_inside}};
        j["warning"] = rec.fresnel.both_inside() ? json(nullptr)
                                                 : json("terminal outside the Fresnel zone of the RIS");
        out << j.dump(2) << '\n';
        return exit_ok;
    });
}

int cmd_baseline(const BaselineArgs &args, std::ostream &out, std::ostream &err)
{
    return guarded(err, [&] {
        const std::string started = utc_now();
        const ConfigDocument doc = resolve_document(args.common, args.spacings);
        const ScenarioConfig cfg = to_scenario(doc);

        std::vector<BaselineRecord> rows;
        for (double s : cfg.spacings_lambda)
            rows.push_back(run_los_baseline(cfg, s));

        std::ostringstream csv;
        write_baseline_csv(csv, rows, stream_count(cfg));
        if (!args.out_dir)
        {
            out << csv.str();
            return exit_ok;
        }

        const fs::path root(*args.out_dir);
        fs::create_directories(root);
        write_file(root / "baseline.csv", csv.str());
        json params = common_parameters(args.common);
        params["out"] = *args.out_dir;
        params["spacings_lambda"] = cfg.spacings_lambda;
        write_file(root / "manifest.json",
                   make_manifest("baseline", doc, cfg, params, started, {"baseline.csv", "manifest.json"}).dump(2) +
                       "\n");
        return exit_ok;
    });
}

} // namespace risnf::cli
