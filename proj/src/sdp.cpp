// SPDX-License-Identifier: Apache-2.0
//
// airs6dma - aerial reflecting-surface placement, orientation and beamforming
// Copyright (C) 2026 the airs6dma authors
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not use
// this file except in compliance with the License. You may obtain a copy of the
// License at http://www.apache.org/licenses/LICENSE-2.0.
// Unless required by applicable law or agreed to in writing, software distributed
// under the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR
// CONDITIONS OF ANY KIND, either express or implied. See the License for the
// specific language governing permissions and limitations under the License.
// ------------------------------------------------------------------------------

#include "sdp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "errors.hpp"

namespace a6d
{

namespace
{

using Eigen::MatrixXd;
using Eigen::VectorXd;

// Tr(A B) for Hermitian A, B; real by symmetry.
double herm_trace_product(const CMat &a, const CMat &b)
{
    return a.conjugate().cwiseProduct(b).sum().real();
}

bool nearly_hermitian(const CMat &a)
{
    double scale = 1.0 + a.cwiseAbs().maxCoeff();
    return (a - a.adjoint()).cwiseAbs().maxCoeff() <= 1e-9 * scale;
}

// Gradient of W -> Tr(A W) in the pack() parameterization; the delta slot is
// left at zero. For the pair (i, j): d/dRe = 2 Re A_ij, d/dIm = 2 Im A_ij.
VectorXd linear_coefficients(const CMat &a)
{
    const int n = static_cast<int>(a.rows());
    VectorXd c = VectorXd::Zero(detail::param_dim(n));
    int p = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++p)
        {
            c[2 * p] = 2.0 * a(i, j).real();
            c[2 * p + 1] = 2.0 * a(i, j).imag();
        }
    return c;
}

// Newton direction with diagonal regularization fallback. Returns false when
// no finite descent direction can be produced.
bool newton_direction(const MatrixXd &h, const VectorXd &g, VectorXd &dx)
{
    double base = h.diagonal().cwiseAbs().maxCoeff();
    if (!(base > 0.0) || !std::isfinite(base))
        base = 1.0;
    double ridge = 0.0;
    for (int attempt = 0; attempt < 12; ++attempt)
    {
        MatrixXd hr = h;
        if (ridge > 0.0)
            hr.diagonal().array() += ridge;
        Eigen::LDLT<MatrixXd> ldlt(hr);
        if (ldlt.info() == Eigen::Success)
        {
            dx = ldlt.solve(-g);
            if (dx.allFinite() && g.dot(dx) < 0.0)
                return true;
        }
        ridge = (ridge == 0.0) ? base * 1e-14 : ridge * 100.0;
    }
    return false;
}

} // namespace

namespace detail
{

int param_dim(int n)
{
    return n * (n - 1) + 1;
}

VectorXd pack(const CMat &w, double delta)
{
    const int n = static_cast<int>(w.rows());
    VectorXd x(param_dim(n));
    int p = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++p)
        {
            x[2 * p] = w(i, j).real();
            x[2 * p + 1] = w(i, j).imag();
        }
    x[param_dim(n) - 1] = delta;
    return x;
}

void unpack(const VectorXd &x, int n, CMat &w, double &delta)
{
    w = CMat::Identity(n, n);
    int p = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++p)
        {
            w(i, j) = Cplx(x[2 * p], x[2 * p + 1]);
            w(j, i) = std::conj(w(i, j));
        }
    delta = x[param_dim(n) - 1];
}

bool eval_barrier(const SdpProblem &prob, const VectorXd &x, double t,
                  double *value, VectorXd *grad, MatrixXd *hess)
{
    const int n = static_cast<int>(prob.objective.rows());
    const int nl = static_cast<int>(prob.constraints.size());
    const int d = param_dim(n);
    const int dslot = d - 1;

    CMat w;
    double delta = 0.0;
    unpack(x, n, w, delta);

    Eigen::LLT<CMat> llt(w);
    if (llt.info() != Eigen::Success)
        return false;

    std::vector<double> slack(nl);
    for (int l = 0; l < nl; ++l)
    {
        slack[l] = herm_trace_product(prob.constraints[l], w) - delta;
        if (!(slack[l] > 0.0))
            return false;
    }

    if (value != nullptr)
    {
        double logdet = 0.0;
        for (int i = 0; i < n; ++i)
            logdet += 2.0 * std::log(llt.matrixLLT()(i, i).real());
        double obj = delta + herm_trace_product(prob.objective, w);
        double v = -t * obj - logdet;
        for (int l = 0; l < nl; ++l)
            v -= std::log(slack[l]);
        if (!std::isfinite(v))
            return false;
        *value = v;
    }

    if (grad == nullptr && hess == nullptr)
        return true;

    const CMat v = llt.solve(CMat::Identity(n, n)); // W^{-1}, Hermitian

    if (grad != nullptr)
    {
        VectorXd g = -t * linear_coefficients(prob.objective);
        g[dslot] += -t;
        g -= linear_coefficients(v); // d(-logdet W)
        for (int l = 0; l < nl; ++l)
        {
            g -= linear_coefficients(prob.constraints[l]) / slack[l];
            g[dslot] += 1.0 / slack[l];
        }
        *grad = std::move(g);
    }

    if (hess != nullptr)
    {
        MatrixXd h = MatrixXd::Zero(d, d);
        // -logdet W block: second derivative along directions P, Q equals
        // Tr(W^{-1} P W^{-1} Q) with P, Q the pair basis matrices
        //   P_re(i,j) = E_ij + E_ji,  P_im(i,j) = i (E_ij - E_ji).
        int p = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++p)
            {
                int q = 0;
                for (int k = 0; k < n; ++k)
                    for (int l = k + 1; l < n; ++l, ++q)
                    {
                        const Cplx a = v(l, i) * v(j, k);
                        const Cplx b = v(k, i) * v(j, l);
                        h(2 * p, 2 * q) = 2.0 * (a.real() + b.real());
                        h(2 * p + 1, 2 * q + 1) = 2.0 * (b.real() - a.real());
                        h(2 * p, 2 * q + 1) = 2.0 * (b.imag() - a.imag());
                        const Cplx a2 = v(j, k) * v(l, i);
                        const Cplx b2 = v(i, k) * v(l, j);
                        h(2 * p + 1, 2 * q) = 2.0 * (b2.imag() - a2.imag());
                    }
            }
        // -log slack blocks: rank-one terms u u^T / slack^2 with u = grad of
        // the affine slack (constraint coefficients, -1 in the delta slot).
        for (int l = 0; l < nl; ++l)
        {
            VectorXd u = linear_coefficients(prob.constraints[l]);
            u[dslot] = -1.0;
            h.noalias() += (u * u.transpose()) / (slack[l] * slack[l]);
        }
        h = 0.5 * (h + h.transpose()).eval();
        *hess = std::move(h);
    }
    return true;
}

} // namespace detail

void SdpProblem::validate() const
{
    const auto n = objective.rows();
    if (n < 1 || objective.cols() != n)
        throw std::invalid_argument("SdpProblem: objective must be square and nonempty");
    if (!objective.allFinite() || !nearly_hermitian(objective))
        throw std::invalid_argument("SdpProblem: objective must be finite and Hermitian");
    if (constraints.empty())
        throw std::invalid_argument("SdpProblem: at least one trace constraint is required");
    for (const CMat &c : constraints)
    {
        if (c.rows() != n || c.cols() != n)
            throw std::invalid_argument("SdpProblem: constraint size mismatch");
        if (!c.allFinite() || !nearly_hermitian(c))
            throw std::invalid_argument("SdpProblem: constraints must be finite and Hermitian");
    }
}

SdpSolution solve_unit_diag_sdp(const SdpProblem &prob, const SdpOptions &opt,
                                const CMat *warm)
{
    prob.validate();
    const int n = static_cast<int>(prob.objective.rows());
    const int nl = static_cast<int>(prob.constraints.size());
    const int d = detail::param_dim(n);

    // Normalize coefficient magnitudes so barrier weights stay in a
    // predictable range; delta scales with the constraints.
    double sigma = std::max(1.0, prob.objective.cwiseAbs().maxCoeff() * n);
    for (const CMat &c : prob.constraints)
        sigma = std::max(sigma, c.cwiseAbs().maxCoeff() * n);

    SdpProblem sp;
    sp.objective = prob.objective / sigma;
    sp.constraints.reserve(prob.constraints.size());
    for (const CMat &c : prob.constraints)
        sp.constraints.push_back(c / sigma);

    CMat w0 = CMat::Identity(n, n);
    if (warm != nullptr && warm->rows() == n && warm->cols() == n && warm->allFinite())
    {
        CMat s = 0.5 * (*warm + warm->adjoint());
        s = 0.95 * s + 0.05 * CMat::Identity(n, n);
        s.diagonal().setOnes();
        if (Eigen::LLT<CMat>(s).info() == Eigen::Success)
            w0 = std::move(s);
    }

    double slack_min = std::numeric_limits<double>::infinity();
    for (const CMat &c : sp.constraints)
        slack_min = std::min(slack_min, herm_trace_product(c, w0));
    double margin = std::max(1e-3, 0.05 * std::abs(slack_min));
    Eigen::VectorXd x = detail::pack(w0, slack_min - margin);

    if (!detail::eval_barrier(sp, x, opt.t0, nullptr, nullptr, nullptr))
        throw SolverError("sdp: failed to initialize a strictly feasible interior point");

    const double nu = static_cast<double>(n + nl);
    double t = opt.t0;
    int newton_total = 0;
    bool reached = false;
    bool stalled = false;

    double phi = 0.0;
    Eigen::VectorXd g(d), dx(d);
    Eigen::MatrixXd h(d, d);

    while (true)
    {
        for (int it = 0; it < opt.max_center_steps; ++it)
        {
            if (!detail::eval_barrier(sp, x, t, &phi, &g, &h))
            {
                stalled = true; // numerical escape from the domain
                break;
            }
            if (!newton_direction(h, g, dx))
            {
                stalled = true;
                break;
            }
            const double slope = g.dot(dx); // negative
            if (-slope / 2.0 <= opt.newton_tol)
                break;
            bool moved = false;
            for (double alpha = 1.0; alpha > 1e-16; alpha *= 0.5)
            {
                Eigen::VectorXd xn = x + alpha * dx;
                double phin = 0.0;
                if (!detail::eval_barrier(sp, xn, t, &phin, nullptr, nullptr))
                    continue;
                if (phin <= phi + 0.25 * alpha * slope)
                {
                    x = std::move(xn);
                    moved = true;
                    ++newton_total;
                    break;
                }
            }
            if (!moved)
            {
                stalled = true;
                break;
            }
        }

        CMat w;
        double delta = 0.0;
        detail::unpack(x, n, w, delta);
        const double obj = delta + herm_trace_product(sp.objective, w);
        const double gap = nu / t;
        if (gap <= opt.gap_tol * std::max(1.0, std::abs(obj)))
        {
            reached = true;
            break;
        }
        if (stalled || t > 1e18)
            break;
        t *= opt.mu;
    }

    SdpSolution out;
    double delta = 0.0;
    detail::unpack(x, n, out.w, delta);
    out.delta = delta * sigma;
    out.objective = (delta + herm_trace_product(sp.objective, out.w)) * sigma;
    out.gap_bound = nu / t * sigma;
    out.newton_steps = newton_total;
    out.reached_tol = reached;
    if (!out.w.allFinite() || !std::isfinite(out.delta))
        throw SolverError("sdp: non-finite iterate");
    return out;
}

} // namespace a6d
