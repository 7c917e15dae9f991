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

#include "risnf/geometry.hpp"

#include <Eigen/Dense>

#include <complex>
#include <optional>
#include <span>
#include <stdexcept>

namespace risnf
{

using cd = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Carrier and antenna parameters, all in linear units.
struct PhysicalParams
{
    double frequency = 0.0;  // [Hz]
    double wavelength = 0.0; // c / f [m]
    double wavenumber = 0.0; // 2 pi / lambda [rad/m]
    double absorption = 0.0; // molecular absorption coefficient [1/m]
    double tx_gain = 1.0;    // G_m, linear
    double rx_gain = 1.0;    // G_n, linear

    static PhysicalParams from_frequency(double frequency_hz, double absorption_per_m,
                                         double tx_gain_linear, double rx_gain_linear);

    friend bool operator==(const PhysicalParams &, const PhysicalParams &) = default;
};

/// Raised when two points used to build a channel coincide.
class ChannelError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// Tx -> RIS channel T (W x Nt):
///   T[w, m] = sqrt(PL) exp(-j k D),  PL = G_m Lx Ly exp(-kappa D) / (4 pi D^2).
CMatrix build_tx_ris(const PhysicalParams &params, const RisPanel &panel,
                     std::span<const CartesianPoint> tx_positions,
                     std::span<const CartesianPoint> ris_positions);

/// RIS -> Rx channel R (Nr x W), the Fresnel-Kirchhoff element response:
///   R[n, w] = sqrt(G_n exp(-kappa D)) Lx Ly / (j lambda D) F(theta) exp(+j k D),
/// with F(theta) = (1 + cos theta) / 2 and cos theta = |z_n - z_w| / D.
///
/// The Tx side carries no obliquity factor and the two links use opposite phase
/// signs. Both asymmetries are part of the model and kept as is.
CMatrix build_ris_rx(const PhysicalParams &params, const RisPanel &panel,
                     std::span<const CartesianPoint> ris_positions,
                     std::span<const CartesianPoint> rx_positions);

/// R diag(beta) T.
CMatrix effective_channel(const CMatrix &T, const CMatrix &R, const CVector &beta);

/// Direct line-of-sight channel H (Nr x Nt):
///   H[n, m] = sqrt(G_n G_m exp(-kappa D)) lambda / (4 pi D) exp(-j k D).
CMatrix build_direct_los(const PhysicalParams &params,
                         std::span<const CartesianPoint> tx_positions,
                         std::span<const CartesianPoint> rx_positions);

struct ChannelSet
{
    CMatrix T;     // W x Nt
    CMatrix R;     // Nr x W
    CMatrix H_eff; // Nr x Nt, for the phase profile used at construction
    std::optional<CMatrix> H_direct;
};

ChannelSet build_channel_set(const PhysicalParams &params, const RisPanel &panel,
                             std::span<const CartesianPoint> tx_positions,
                             std::span<const CartesianPoint> rx_positions,
                             const CVector &beta, bool with_direct);

} // namespace risnf
