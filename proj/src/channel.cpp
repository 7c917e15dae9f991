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

#include "risnf/channel.hpp"

#include <cmath>
#include <string>

namespace risnf
{

namespace
{

struct Path
{
    double distance;
    cd phasor; // e^{-jkD}
};

// Distance and e^{-jkD} with the phase reduced to whole wavelengths in extended
// precision; k D runs into the thousands of radians at THz frequencies.
Path trace_path(const PhysicalParams &params, const CartesianPoint &a, const CartesianPoint &b, const char *what,
                std::size_t i, std::size_t j)
{
    using real = long double;
    const real dx = real(a.x) - real(b.x), dy = real(a.y) - real(b.y), dz = real(a.z) - real(b.z);
    const real d = std::sqrt(dx * dx + dy * dy + dz * dz);
    if (!(d > 0.0L))
        throw ChannelError(std::string(what) + " " + std::to_string(i) + " and " + std::to_string(j) +
                           " coincide");
    const real cycles = d * real(params.frequency) / real(speed_of_light);
    const double turn = double(cycles - std::nearbyint(cycles));
    return {double(d), std::polar(1.0, -2.0 * pi * turn)};
}

} // namespace

PhysicalParams PhysicalParams::from_frequency(double frequency_hz, double absorption_per_m,
                                              double tx_gain_linear, double rx_gain_linear)
{
    if (!(frequency_hz > 0.0))
        throw std::invalid_argument("carrier frequency must be positive");
    if (!(absorption_per_m >= 0.0))
        throw std::invalid_argument("absorption coefficient must be >= 0");
    if (!(tx_gain_linear > 0.0) || !(rx_gain_linear > 0.0))
        throw std::invalid_argument("antenna gains must be positive");

    PhysicalParams p;
    p.frequency = frequency_hz;
    p.wavelength = speed_of_light / frequency_hz;
    p.wavenumber = 2.0 * pi / p.wavelength;
    p.absorption = absorption_per_m;
    p.tx_gain = tx_gain_linear;
    p.rx_gain = rx_gain_linear;
    return p;
}

CMatrix build_tx_ris(const PhysicalParams &params, const RisPanel &panel,
                     std::span<const CartesianPoint> tx_positions,
                     std::span<const CartesianPoint> ris_positions)
{
    const double area = panel.element_area();
    CMatrix T(Eigen::Index(ris_positions.size()), Eigen::Index(tx_positions.size()));
    for (std::size_t w = 0; w < ris_positions.size(); ++w)
        for (std::size_t m = 0; m < tx_positions.size(); ++m)
        {
            const Path path = trace_path(params, tx_positions[m], ris_positions[w], "Tx antenna / RIS element", m, w);
            const double D = path.distance;
            const double pl = params.tx_gain * area * std::exp(-params.absorption * D) / (4.0 * pi * D * D);
            T(Eigen::Index(w), Eigen::Index(m)) = std::sqrt(pl) * path.phasor;
        }
    return T;
}

CMatrix build_ris_rx(const PhysicalParams &params, const RisPanel &panel,
                     std::span<const CartesianPoint> ris_positions,
                     std::span<const CartesianPoint> rx_positions)
{
    const double area = panel.element_area();
    const cd j(0.0, 1.0);
    CMatrix R(Eigen::Index(rx_positions.size()), Eigen::Index(ris_positions.size()));
    for (std::size_t n = 0; n < rx_positions.size(); ++n)
        for (std::size_t w = 0; w < ris_positions.size(); ++w)
        {
            const Path path = trace_path(params, ris_positions[w], rx_positions[n], "RIS element / Rx antenna", w, n);
            const double D = path.distance;
            const double cos_theta = std::abs(rx_positions[n].z - ris_positions[w].z) / D;
            const double leaning = 0.5 * (1.0 + cos_theta);
            const double amp = std::sqrt(params.rx_gain * std::exp(-params.absorption * D));
            R(Eigen::Index(n), Eigen::Index(w)) =
                amp * area / (j * params.wavelength * D) * leaning * std::conj(path.phasor);
        }
    return R;
}

CMatrix effective_channel(const CMatrix &T, const CMatrix &R, const CVector &beta)
{
    if (R.cols() != T.rows() || beta.size() != T.rows())
        throw std::invalid_argument("effective_channel: dimension mismatch (R is " + std::to_string(R.rows()) + "x" +
                                    std::to_string(R.cols()) + ", T is " + std::to_string(T.rows()) + "x" +
                                    std::to_string(T.cols()) + ", beta has " + std::to_string(beta.size()) + ")");
    return R * beta.asDiagonal() * T;
}

CMatrix build_direct_los(const PhysicalParams &params,
                         std::span<const CartesianPoint> tx_positions,
                         std::span<const CartesianPoint> rx_positions)
{
    CMatrix H(Eigen::Index(rx_positions.size()), Eigen::Index(tx_positions.size()));
    for (std::size_t n = 0; n < rx_positions.size(); ++n)
        for (std::size_t m = 0; m < tx_positions.size(); ++m)
        {
            const Path path = trace_path(params, tx_positions[m], rx_positions[n], "Tx antenna / Rx antenna", m, n);
            const double D = path.distance;
            const double amp = std::sqrt(params.rx_gain * params.tx_gain * std::exp(-params.absorption * D)) *
                               params.wavelength / (4.0 * pi * D);
            H(Eigen::Index(n), Eigen::Index(m)) = amp * path.phasor;
        }
    return H;
}

ChannelSet build_channel_set(const PhysicalParams &params, const RisPanel &panel,
                             std::span<const CartesianPoint> tx_positions,
                             std::span<const CartesianPoint> rx_positions,
                             const CVector &beta, bool with_direct)
{
    const auto ris = ris_element_positions(panel);
    ChannelSet set;
    set.T = build_tx_ris(params, panel, tx_positions, ris);
    set.R = build_ris_rx(params, panel, ris, rx_positions);
    set.H_eff = effective_channel(set.T, set.R, beta);
    if (with_direct)
        set.H_direct = build_direct_los(params, tx_positions, rx_positions);
    return set;
}

} // namespace risnf
