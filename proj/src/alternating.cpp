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

#include "risnf/optimizer.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace risnf
{

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream)
{
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

CVector random_phase_profile(std::size_t size, std::uint64_t seed, std::uint64_t stream)
{
    // Raw engine output only: std::uniform_real_distribution is not specified
    // bit-exactly across standard libraries.
    std::mt19937_64 engine(derive_seed(seed, stream));
    CVector beta(Eigen::Index(size), 1);
    for (Eigen::Index w = 0; w < beta.size(); ++w)
    {
        const double u = double(engine() >> 11) * 0x1.0p-53; // [0, 1)
        beta(w) = std::polar(1.0, 2.0 * pi * u);
    }
    return beta;
}

void validate(const AltOptConfig &cfg)
{
    if (cfg.starts < 1)
        throw std::invalid_argument("AltOptConfig: at least one random start is required");
    if (!(cfg.gamma > 0.0))
        throw std::invalid_argument("AltOptConfig: gamma must be positive");
    if (cfg.max_iterations < 1)
        throw std::invalid_argument("AltOptConfig: max_iterations must be positive");
}

const char *to_string(Convergence c)
{
    switch (c)
    {
    case Convergence::Gamma:
        return "gamma";
    case Convergence::Cap:
        return "cap";
    }
    return "unknown";
}

AltOptResult alternating_optimize(const CMatrix &T, const CMatrix &R, double power, double noise,
                                  const AltOptConfig &cfg)
{
    validate(cfg);
    if (R.cols() != T.rows())
        throw std::invalid_argument("alternating_optimize: R and T disagree on the element count");
    const auto W = std::size_t(T.rows());

    AltOptResult res;
    double best = -1.0;
    for (std::size_t l = 0; l < cfg.starts; ++l)
    {
        CVector beta = random_phase_profile(W, cfg.seed, l);
        const double c = waterfill(effective_channel(T, R, beta), power, noise).capacity;
        if (c > best)
        {
            best = c;
            res.beta = std::move(beta);
            res.best_start = l;
        }
    }
    res.initial_capacity = best;

    res.waterfill = waterfill(effective_channel(T, R, res.beta), power, noise);
    res.trace.push_back(capacity_given_covariance(effective_channel(T, R, res.beta), res.waterfill.covariance, noise));
    double previous = res.waterfill.capacity;
    res.status = Convergence::Cap;

    while (res.iterations < cfg.max_iterations)
    {
        ++res.iterations;
        res.beta = sweep_all_phases(R, T, res.waterfill.covariance, res.beta, noise);
        const CMatrix H = effective_channel(T, R, res.beta);
        res.trace.push_back(capacity_given_covariance(H, res.waterfill.covariance, noise));

        res.waterfill = waterfill(H, power, noise);
        res.trace.push_back(capacity_given_covariance(H, res.waterfill.covariance, noise));

        const double current = res.waterfill.capacity;
        const bool done = current - previous <= cfg.gamma * std::abs(previous);
        previous = current;
        if (done)
        {
            res.status = Convergence::Gamma;
            break;
        }
    }
    return res;
}

} // namespace risnf
