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

#include "risnf/sweep.hpp"

#include "risnf/worker_pool.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace risnf
{

std::vector<double> sweep_positions(const SweepRange &range)
{
    std::vector<double> z(range.count);
    const double span = range.z_max - range.z_min;
    for (std::size_t i = 0; i < range.count; ++i)
    {
        if (range.placement == Placement::Midpoints || range.count == 1)
            z[i] = range.z_min + (double(i) + 0.5) * (span / double(range.count));
        else
            z[i] = range.z_min + double(i) * (span / double(range.count - 1));
    }
    return z;
}

void validate(const ScenarioConfig &cfg)
{
    const auto fail = [](const std::string &what) { throw std::invalid_argument(what); };
    if (!(cfg.physics.frequency > 0.0))
        fail("physics.frequency must be positive");
    if (cfg.sweep.count < 1)
        fail("sweep.count must be >= 1");
    if (!(cfg.sweep.z_min < cfg.sweep.z_max))
        fail("sweep.z_min must be below sweep.z_max");
    if (cfg.tx.center.z == cfg.rx.center.z)
        fail("tx and rx arrays must sit at different heights");
    if (cfg.spacings_lambda.empty())
        fail("at least one inter-antenna spacing is required");
    for (double s : cfg.spacings_lambda)
        if (!(s > 0.0))
            fail("every inter-antenna spacing must be positive");
    if (cfg.tx_spacing_lambda && !(*cfg.tx_spacing_lambda > 0.0))
        fail("tx spacing must be positive");
    if (cfg.rx_spacing_lambda && !(*cfg.rx_spacing_lambda > 0.0))
        fail("rx spacing must be positive");
    if (!(cfg.power >= 0.0))
        fail("transmit power must be >= 0");
    if (!(cfg.noise > 0.0))
        fail("noise power must be positive");
    validate(cfg.panel);
    validate(cfg.optimizer);
}

TerminalArrays arrays_for_spacing(const ScenarioConfig &cfg, double spacing_lambda)
{
    const double lambda = cfg.physics.wavelength;
    TerminalArrays out{cfg.tx, cfg.rx};
    out.tx.spacing = cfg.tx_spacing_lambda.value_or(spacing_lambda) * lambda;
    out.rx.spacing = cfg.rx_spacing_lambda.value_or(spacing_lambda) * lambda;
    return out;
}

RisPanel panel_at(const ScenarioConfig &cfg, double z)
{
    RisPanel p = cfg.panel;
    p.z = z;
    return p;
}

std::uint64_t position_seed(std::uint64_t base_seed, double z)
{
    if (z == 0.0)
        z = 0.0; // fold -0.0 onto +0.0
    return derive_seed(base_seed, std::bit_cast<std::uint64_t>(z));
}

SingularValueStats singular_value_stats(std::span<const double> values, std::span<const double> powers)
{
    if (values.empty())
        throw std::invalid_argument("singular_value_stats: empty sequence");
    const double n = double(values.size());
    const double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
    double acc = 0.0;
    for (double v : values)
        acc += (v - mean) * (v - mean);

    SingularValueStats st;
    st.variance = acc / n;
    st.dof = std::size_t(std::count_if(powers.begin(), powers.end(), [](double p) { return p > 0.0; }));
    return st;
}

FresnelStatus fresnel_status(const ScenarioConfig &cfg, const TerminalArrays &arrays, double z)
{
    const RisPanel panel = panel_at(cfg, z);
    FresnelStatus st;
    st.bounds = fresnel_bounds(panel, cfg.physics.wavelength);
    st.tx_distance = distance(panel.centroid(), arrays.tx.center);
    st.rx_distance = distance(panel.centroid(), arrays.rx.center);
    st.tx_inside = st.bounds.contains(st.tx_distance);
    st.rx_inside = st.bounds.contains(st.rx_distance);
    return st;
}

SweepRecord evaluate_position(const ScenarioConfig &cfg, double spacing_lambda, double z)
{
    const auto start = std::chrono::steady_clock::now();
    SweepRecord rec;
    rec.z = z;
    try
    {
        const TerminalArrays arrays = arrays_for_spacing(cfg, spacing_lambda);
        const RisPanel panel = panel_at(cfg, z);
        rec.fresnel = fresnel_status(cfg, arrays, z);

        const auto tx = array_element_positions(arrays.tx);
        const auto rx = array_element_positions(arrays.rx);
        const auto ris = ris_element_positions(panel);
        const CMatrix T = build_tx_ris(cfg.physics, panel, tx, ris);
        const CMatrix R = build_ris_rx(cfg.physics, panel, ris, rx);

        AltOptConfig opt = cfg.optimizer;
        opt.seed = position_seed(cfg.optimizer.seed, z);
        AltOptResult res = alternating_optimize(T, R, cfg.power, cfg.noise, opt);

        rec.capacity = res.waterfill.capacity;
        rec.singular_values = res.waterfill.singular_values;
        rec.powers = res.waterfill.powers;
        const auto st = singular_value_stats(rec.singular_values, rec.powers);
        rec.variance = st.variance;
        rec.dof = st.dof;
        rec.status = res.status;
        rec.iterations = res.iterations;
        rec.beta = std::move(res.beta);
        rec.covariance = std::move(res.waterfill.covariance);
        rec.ok = true;
    }
    catch (const std::exception &e)
    {
        rec.ok = false;
        rec.error = e.what();
    }
    rec.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rec;
}

namespace
{

void report_fresnel(const SweepOptions &options, double spacing_lambda, const SweepRecord &rec)
{
    if (!options.on_warning || !rec.ok || rec.fresnel.both_inside())
        return;
    std::ostringstream msg;
    msg << "spacing " << spacing_lambda << " lambda, RIS z = " << rec.z << " m: ";
    if (!rec.fresnel.tx_inside)
        msg << "Tx at " << rec.fresnel.tx_distance << " m ";
    if (!rec.fresnel.rx_inside)
        msg << "Rx at " << rec.fresnel.rx_distance << " m ";
    msg << "outside the Fresnel zone (" << rec.fresnel.bounds.lower << ", " << rec.fresnel.bounds.upper << "] m";
    options.on_warning(msg.str());
}

} // namespace

std::vector<SweepRecord> run_position_sweep(const ScenarioConfig &cfg, double spacing_lambda,
                                            const SweepOptions &options)
{
    validate(cfg);
    const auto z = sweep_positions(cfg.sweep);
    std::vector<SweepRecord> out(z.size());
    const std::size_t jobs = options.jobs == 0 ? default_jobs() : options.jobs;
    parallel_for(z.size(), jobs, [&](std::size_t i) { out[i] = evaluate_position(cfg, spacing_lambda, z[i]); });
    for (const auto &rec : out)
        report_fresnel(options, spacing_lambda, rec);
    return out;
}

BaselineRecord run_los_baseline(const ScenarioConfig &cfg, double spacing_lambda)
{
    const TerminalArrays arrays = arrays_for_spacing(cfg, spacing_lambda);
    const CMatrix H = build_direct_los(cfg.physics, array_element_positions(arrays.tx),
                                       array_element_positions(arrays.rx));
    const WaterfillResult wf = waterfill(H, cfg.power, cfg.noise);

    BaselineRecord rec;
    rec.spacing_lambda = spacing_lambda;
    rec.capacity = wf.capacity;
    rec.singular_values = wf.singular_values;
    rec.powers = wf.powers;
    rec.dof = wf.dof;
    return rec;
}

std::optional<std::size_t> argmax_capacity(std::span<const SweepRecord> records)
{
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < records.size(); ++i)
        if (records[i].ok && (!best || records[i].capacity > records[*best].capacity))
            best = i;
    return best;
}

std::size_t CampaignResult::failed_positions() const
{
    std::size_t n = 0;
    for (const auto &s : spacings)
        n += std::size_t(std::count_if(s.sweep.begin(), s.sweep.end(), [](const SweepRecord &r) { return !r.ok; }));
    return n;
}

std::size_t CampaignResult::total_positions() const
{
    std::size_t n = 0;
    for (const auto &s : spacings)
        n += s.sweep.size();
    return n;
}

CampaignResult run_campaign(const ScenarioConfig &cfg, const SweepOptions &options)
{
    validate(cfg);
    const auto z = sweep_positions(cfg.sweep);
    const std::size_t ns = cfg.spacings_lambda.size();

    CampaignResult out;
    out.spacings.resize(ns);
    for (std::size_t s = 0; s < ns; ++s)
    {
        out.spacings[s].spacing_lambda = cfg.spacings_lambda[s];
        out.spacings[s].sweep.resize(z.size());
        if (cfg.include_baseline)
            out.spacings[s].baseline = run_los_baseline(cfg, cfg.spacings_lambda[s]);
    }

    const std::size_t jobs = options.jobs == 0 ? default_jobs() : options.jobs;
    parallel_for(ns * z.size(), jobs, [&](std::size_t task) {
        const std::size_t s = task / z.size();
        const std::size_t i = task % z.size();
        out.spacings[s].sweep[i] = evaluate_position(cfg, cfg.spacings_lambda[s], z[i]);
    });

    for (auto &s : out.spacings)
    {
        for (const auto &rec : s.sweep)
            report_fresnel(options, s.spacing_lambda, rec);
        s.argmax = argmax_capacity(s.sweep);
    }
    return out;
}

} // namespace risnf
