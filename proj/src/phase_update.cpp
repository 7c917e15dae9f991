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
#include <stdexcept>

namespace risnf
{

PhaseStepContext::PhaseStepContext(const CMatrix &R, const CMatrix &T, const CMatrix &covariance, CVector beta)
    : R_(R), beta_(std::move(beta))
{
    if (R.cols() != T.rows() || beta_.size() != T.rows())
        throw std::invalid_argument("PhaseStepContext: R, T and beta disagree on the element count");
    if (covariance.rows() != T.cols() || covariance.cols() != T.cols())
        throw std::invalid_argument("PhaseStepContext: covariance must be Nt x Nt");

    const CMatrix herm = 0.5 * (covariance + covariance.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> eig(herm);
    const double trace = std::abs(herm.trace().real());
    Eigen::VectorXd root = eig.eigenvalues();
    for (Eigen::Index i = 0; i < root.size(); ++i)
        root(i) = root(i) < 1e-14 * trace ? 0.0 : std::sqrt(root(i));
    whitened_ = T * eig.eigenvectors() * root.asDiagonal();
    refresh();
}

void PhaseStepContext::refresh()
{
    product_ = R_ * beta_.asDiagonal() * whitened_;
}

CMatrix PhaseStepContext::partial_sum(std::size_t w) const
{
    const auto i = Eigen::Index(w);
    if (beta_.size() == 1)
        return CMatrix::Zero(product_.rows(), product_.cols());
    return product_ - beta_(i) * R_.col(i) * whitened_.row(i);
}

void PhaseStepContext::set_phase(std::size_t w, cd value)
{
    const auto i = Eigen::Index(w);
    product_.noalias() += (value - beta_(i)) * R_.col(i) * whitened_.row(i);
    beta_(i) = value;
}

cd phase_update_eigenvalue(const PhaseStepContext &ctx, std::size_t w, double noise)
{
    if (w >= ctx.size())
        throw std::out_of_range("phase_update_eigenvalue: element index out of range");
    const auto i = Eigen::Index(w);
    const CMatrix M = ctx.partial_sum(w);
    const CVector r = ctx.ris_rx().col(i);
    // t_w'^H is row w of T'.
    const Eigen::RowVectorXcd t_h = ctx.whitened_tx().row(i);

    const Eigen::Index nr = r.size();
    CMatrix X = CMatrix::Identity(nr, nr);
    X.noalias() += (M * M.adjoint() + t_h.squaredNorm() * (r * r.adjoint())) / noise;

    // tr(X^-1 Y) with Y = r t'^H M^H / noise collapses to t'^H M^H X^-1 r / noise.
    const CVector x = X.llt().solve(r);
    return (t_h * M.adjoint() * x)(0) / noise;
}

cd optimize_single_phase(const PhaseStepContext &ctx, std::size_t w, double noise)
{
    const cd psi = phase_update_eigenvalue(ctx, w, noise);
    const auto i = Eigen::Index(w);
    const double scale = ctx.ris_rx().col(i).norm() * ctx.whitened_tx().row(i).norm() * ctx.product().norm() / noise;
    if (!(std::abs(psi) > 1e-15 * (1.0 + scale)))
        return {1.0, 0.0};
    return std::polar(1.0, -std::arg(psi));
}

CVector sweep_all_phases(const CMatrix &R, const CMatrix &T, const CMatrix &covariance,
                         const CVector &beta, double noise)
{
    PhaseStepContext ctx(R, T, covariance, beta);
    for (std::size_t w = 0; w < ctx.size(); ++w)
        ctx.set_phase(w, optimize_single_phase(ctx, w, noise));
    return ctx.beta();
}

} // namespace risnf
