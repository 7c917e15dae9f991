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

#include <cstddef>
#include <cstdint>
#include <vector>

namespace risnf
{

/// Capacity-optimal transmit covariance for a fixed channel.
struct WaterfillResult
{
    std::vector<double> singular_values; // all min(Nr, Nt) values, descending
    std::vector<double> powers;          // per stream [W], same length
    double water_level = 0.0;            // 1 / p0 [W]
    double capacity = 0.0;               // [bit/s/Hz]
    CMatrix covariance;                  // Nt x Nt
    std::size_t rank = 0;                // E, streams above the rank threshold
    std::size_t dof = 0;                 // streams with positive power
};

/// Relative cutoff below which a singular value counts as zero.
inline constexpr double rank_tolerance = 1e-12;

/// Truncated SVD of H followed by water-filling over its eigenmodes under sum
/// power P. The water level is found exactly: for each active prefix of the
/// sorted modes the level is closed form, and the largest prefix whose weakest
/// mode stays strictly below the level is taken.
///
/// An all-zero H gives zero powers and zero capacity. Throws
/// std::invalid_argument for P < 0 or noise <= 0.
WaterfillResult waterfill(const CMatrix &H, double power, double noise);

/// log2 det(I + H Rs H^H / noise), via a Cholesky factorization.
/// Throws std::invalid_argument when Rs is not Hermitian PSD (an eigenvalue
/// below -1e-9 tr(Rs)).
double capacity_given_covariance(const CMatrix &H, const CMatrix &covariance, double noise);

/// State for the per-element phase updates under a fixed transmit covariance.
///
/// Holds R, the whitened Tx channel T' = T U sqrt(Lambda) from the EVD of the
/// covariance (eigenvalues below 1e-14 tr are clamped to zero), the current phase
/// profile and the running product R diag(beta) T'. Row w of T' is t_w'^H.
class PhaseStepContext
{
  public:
    PhaseStepContext(const CMatrix &R, const CMatrix &T, const CMatrix &covariance, CVector beta);

    std::size_t size() const { return std::size_t(beta_.size()); }
    const CVector &beta() const { return beta_; }
    const CMatrix &whitened_tx() const { return whitened_; }
    const CMatrix &ris_rx() const { return R_; }

    /// R diag(beta) T' for the current profile.
    const CMatrix &product() const { return product_; }

    /// M_w = sum over i != w of beta_i r_i t_i'^H.
    CMatrix partial_sum(std::size_t w) const;

    /// Replace beta_w and update the running product in place.
    void set_phase(std::size_t w, cd value);

    /// Rebuild the running product from scratch to shed accumulated rounding.
    void refresh();

  private:
    CMatrix R_;
    CMatrix whitened_;
    CVector beta_;
    CMatrix product_;
};

/// Closed-form maximizer of the capacity over beta_w with everything else fixed:
/// exp(-j arg Psi_w), where Psi_w = tr(X_w^-1 Y_w) is the only nonzero eigenvalue
/// of the rank-one X_w^-1 Y_w, or 1 when Psi_w vanishes.
cd optimize_single_phase(const PhaseStepContext &ctx, std::size_t w, double noise);

/// Psi_w itself, exposed for diagnostics and tests.
cd phase_update_eigenvalue(const PhaseStepContext &ctx, std::size_t w, double noise);

/// One ascending pass w = 0 .. W-1 of optimize_single_phase.
CVector sweep_all_phases(const CMatrix &R, const CMatrix &T, const CMatrix &covariance,
                         const CVector &beta, double noise);

struct AltOptConfig
{
    std::size_t starts = 100;          // L
    double gamma = 1e-5;               // relative objective increase that stops the ascent
    std::size_t max_iterations = 200;  // outer iteration cap
    std::uint64_t seed = 0;

    friend bool operator==(const AltOptConfig &, const AltOptConfig &) = default;
};

void validate(const AltOptConfig &cfg);

enum class Convergence
{
    Gamma, // relative increase fell below gamma
    Cap    // hit max_iterations
};

const char *to_string(Convergence c);

struct AltOptResult
{
    CVector beta;
    WaterfillResult waterfill;
    /// Objective after the initial water-fill and then after every phase pass and
    /// every water-fill, all evaluated as log-det capacity. Non-decreasing.
    std::vector<double> trace;
    double initial_capacity = 0.0; // best of the random starts
    std::size_t best_start = 0;
    std::size_t iterations = 0;
    Convergence status = Convergence::Gamma;
};

/// SplitMix64 finalizer over (seed, stream); used to derive independent RNG keys.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Unit-modulus profile with phases uniform on [0, 2 pi), drawn from a
/// mt19937_64 stream keyed on (seed, stream). Bit-reproducible across platforms.
CVector random_phase_profile(std::size_t size, std::uint64_t seed, std::uint64_t stream);

/// Multi-start alternating optimization of the phase profile and transmit
/// covariance. Ties between starts go to the lowest start index.
AltOptResult alternating_optimize(const CMatrix &T, const CMatrix &R, double power, double noise,
                                  const AltOptConfig &cfg);

} // namespace risnf
