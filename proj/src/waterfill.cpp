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

#include <Eigen/SVD>

#include <cmath>
#include <stdexcept>

namespace risnf
{

WaterfillResult waterfill(const CMatrix &H, double power, double noise)
{
    if (!(power >= 0.0) || !std::isfinite(power))
        throw std::invalid_argument("waterfill: transmit power must be finite and >= 0");
    if (!(noise > 0.0) || !std::isfinite(noise))
        throw std::invalid_argument("waterfill: noise power must be positive");

    const Eigen::Index nt = H.cols();
    const std::size_t streams = std::size_t(std::min(H.rows(), H.cols()));

    WaterfillResult res;
    res.covariance = CMatrix::Zero(nt, nt);
    res.singular_values.assign(streams, 0.0);
    res.powers.assign(streams, 0.0);
    if (streams == 0)
        return res;

    Eigen::JacobiSVD<CMatrix> svd(H, Eigen::ComputeThinV);
    const auto &sv = svd.singularValues(); // descending
    for (std::size_t i = 0; i < streams; ++i)
        res.singular_values[i] = sv(Eigen::Index(i));

    const double top = res.singular_values[0];
    if (!(top > 0.0))
        return res;

    std::size_t rank = 0;
    while (rank < streams && res.singular_values[rank] > rank_tolerance * top)
        ++rank;
    res.rank = rank;

    // Noise-to-gain levels sigma^2 / Delta_i^2, ascending.
    std::vector<double> floor(rank);
    for (std::size_t i = 0; i < rank; ++i)
        floor[i] = noise / (res.singular_values[i] * res.singular_values[i]);

    if (power == 0.0)
    {
        res.water_level = floor[0];
        return res;
    }

    // Largest active prefix whose weakest mode is strictly below the level. The
    // one-mode prefix always qualifies when P > 0.
    double level = 0.0;
    std::size_t active = 0;
    double prefix = 0.0;
    std::vector<double> prefix_sum(rank + 1, 0.0);
    for (std::size_t i = 0; i < rank; ++i)
        prefix_sum[i + 1] = (prefix += floor[i]);
    for (std::size_t m = rank; m >= 1; --m)
    {
        const double candidate = (power + prefix_sum[m]) / double(m);
        if (candidate > floor[m - 1])
        {
            level = candidate;
            active = m;
            break;
        }
    }
    res.water_level = level;

    for (std::size_t i = 0; i < active; ++i)
    {
        const double p = level - floor[i];
        if (p > 0.0)
        {
            res.powers[i] = p;
            ++res.dof;
            res.capacity += std::log2(1.0 + res.singular_values[i] * res.singular_values[i] * p / noise);
        }
    }

    const CMatrix &V = svd.matrixV();
    for (std::size_t i = 0; i < active; ++i)
    {
        const auto v = V.col(Eigen::Index(i));
        res.covariance.noalias() += res.powers[i] * (v * v.adjoint());
    }
    return res;
}

double capacity_given_covariance(const CMatrix &H, const CMatrix &covariance, double noise)
{
    if (!(noise > 0.0))
        throw std::invalid_argument("capacity_given_covariance: noise power must be positive");
    if (covariance.rows() != H.cols() || covariance.cols() != H.cols())
        throw std::invalid_argument("capacity_given_covariance: covariance must be Nt x Nt");

    const CMatrix herm = 0.5 * (covariance + covariance.adjoint());
    if ((herm - covariance).norm() > 1e-9 * std::max(1.0, covariance.norm()))
        throw std::invalid_argument("capacity_given_covariance: covariance is not Hermitian");
    if (herm.rows() > 0)
    {
        Eigen::SelfAdjointEigenSolver<CMatrix> eig(herm, Eigen::EigenvaluesOnly);
        const double trace = herm.trace().real();
        if (eig.eigenvalues().minCoeff() < -1e-9 * std::abs(trace))
            throw std::invalid_argument("capacity_given_covariance: covariance is not positive semi-definite");
    }

    const Eigen::Index nr = H.rows();
    CMatrix A = CMatrix::Identity(nr, nr);
    A.noalias() += H * herm * H.adjoint() / noise;
    A = 0.5 * (A + A.adjoint());
    Eigen::LLT<CMatrix> llt(A);
    if (llt.info() != Eigen::Success)
        throw std::runtime_error("capacity_given_covariance: log-det argument is not positive definite");
    double logdet = 0.0;
    const auto &L = llt.matrixLLT();
    for (Eigen::Index i = 0; i < nr; ++i)
        logdet += std::log2(L(i, i).real());
    return 2.0 * logdet;
}

} // namespace risnf
