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

#include "beamforming.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "errors.hpp"
#include "geometry.hpp"

namespace a6d
{

std::vector<double> user_weights(const Scenario &sc, const Pose &pose)
{
    const LinkAngles link = link_angles(sc, pose);
    const int nu = static_cast<int>(sc.users.size());
    std::vector<double> ratio(nu);
    double total = 0.0;
    for (int l = 0; l < nu; ++l)
    {
        const double r2 = link.users[l].distance;
        ratio[l] = effective_aperture_gain(sc, pose, l) / (r2 * r2);
        total += ratio[l];
    }
    if (!(total > 0.0))
        throw InfeasiblePoseError("user_weights: no user is on the reflecting side");
    std::vector<double> w(nu);
    for (int l = 0; l < nu; ++l)
        w[l] = std::sqrt(ratio[l] / total);
    return w;
}

CVec autocorrelation(const CMat &w)
{
    const int n = static_cast<int>(w.rows());
    CVec r(n);
    r[0] = Cplx(static_cast<double>(n), 0.0);
    for (int d = 1; d < n; ++d)
    {
        Cplx acc(0.0, 0.0);
        for (int k = 0; k + d < n; ++k)
            acc += w(k + d, k);
        r[d] = 2.0 * acc;
    }
    return r;
}

CMat autocorrelation_functional(const CVec &f)
{
    const int n = static_cast<int>(f.size());
    CMat t(n, n);
    for (int i = 0; i < n; ++i)
    {
        t(i, i) = Cplx(f[0].real(), 0.0);
        for (int j = i + 1; j < n; ++j)
        {
            t(i, j) = std::conj(f[j - i]);
            t(j, i) = f[j - i];
        }
    }
    return t;
}

namespace
{

// Phase vector of the dominant eigenvector, rotated so entry 0 equals 1.
CVec extract_phases(const CMat &w)
{
    Eigen::SelfAdjointEigenSolver<CMat> es(w);
    const int n = static_cast<int>(w.rows());
    CVec u = es.eigenvectors().col(n - 1);
    CVec theta(n);
    for (int i = 0; i < n; ++i)
    {
        double mag = std::abs(u[i]);
        theta[i] = (mag > 1e-12) ? u[i] / mag : Cplx(1.0, 0.0);
    }
    double mag0 = std::abs(theta[0]);
    if (mag0 > 0.0)
        theta *= std::conj(theta[0]) / mag0;
    theta[0] = Cplx(1.0, 0.0);
    return theta;
}

double top_eigenvalue(const CMat &w)
{
    Eigen::SelfAdjointEigenSolver<CMat> es(w);
    return es.eigenvalues()(w.rows() - 1);
}

} // namespace

AxisScaResult sca_axis(const std::vector<CVec> &responses,
                       const std::vector<double> &weights, const ScaOptions &opt)
{
    if (responses.empty() || responses.size() != weights.size())
        throw std::invalid_argument("sca_axis: responses and weights must match and be nonempty");
    const int n = static_cast<int>(responses.front().size());
    for (const CVec &f : responses)
        if (static_cast<int>(f.size()) != n)
            throw std::invalid_argument("sca_axis: response length mismatch");

    SdpProblem prob;
    prob.constraints.reserve(responses.size());
    for (std::size_t l = 0; l < responses.size(); ++l)
        prob.constraints.push_back(weights[l] * autocorrelation_functional(responses[l]));

    // Round one linearizes the rank penalty at W = 0, where the subgradient
    // direction is arbitrary; e_1 keeps the term constant on the unit
    // diagonal, so the first round solves the plain relaxation.
    CVec s = CVec::Zero(n);
    s[0] = Cplx(1.0, 0.0);

    AxisScaResult out;
    double previous_obj = 0.0;
    const CMat *warm = nullptr;
    SdpSolution sol;
    for (int k = 0; k < opt.max_iterations; ++k)
    {
        prob.objective = opt.penalty * (s * s.adjoint());
        sol = solve_unit_diag_sdp(prob, opt.sdp, warm);
        const double lmax = top_eigenvalue(sol.w);
        const double obj = sol.delta - opt.penalty * (static_cast<double>(n) - lmax);
        out.iterations = k + 1;
        out.objective = obj;
        out.delta = sol.delta;
        out.gap_bound = sol.gap_bound;
        out.w = sol.w;
        if (k > 0 && std::abs(obj - previous_obj) < opt.objective_tol)
            break;
        previous_obj = obj;
        Eigen::SelfAdjointEigenSolver<CMat> es(sol.w);
        s = es.eigenvectors().col(n - 1);
        warm = &out.w;
    }

    out.phases = extract_phases(out.w);
    out.achieved = std::numeric_limits<double>::infinity();
    for (std::size_t l = 0; l < responses.size(); ++l)
        out.achieved = std::min(out.achieved,
                                weights[l] * std::norm(responses[l].dot(out.phases)));
    return out;
}

PhaseProfile solve_profile(const Scenario &sc, const Pose &pose,
                           const ScaOptions &opt, const std::vector<double> &weights)
{
    const LinkAngles link = link_angles(sc, pose);
    const int nu = static_cast<int>(sc.users.size());
    std::vector<CVec> fx(nu), fy(nu);
    for (int l = 0; l < nu; ++l)
    {
        AxisResponse f = composite_response(link, l, sc.params);
        fx[l] = std::move(f.x);
        fy[l] = std::move(f.y);
    }
    PhaseProfile profile;
    profile.x = sca_axis(fx, weights, opt).phases;
    profile.y = sca_axis(fy, weights, opt).phases;
    return profile;
}

PhaseProfile optimize_phases(const Scenario &sc, const Pose &pose,
                             const ScaOptions &opt, const PhaseProfile *previous)
{
    PhaseProfile fresh = solve_profile(sc, pose, opt, user_weights(sc, pose));
    if (previous == nullptr)
        return fresh;

    PhaseProfile current = *previous;
    double incumbent = min_snr(sc, pose, current);

    PhaseProfile trial = current;
    trial.x = fresh.x;
    double value = min_snr(sc, pose, trial);
    if (value >= incumbent)
    {
        current = trial;
        incumbent = value;
    }

    trial = current;
    trial.y = fresh.y;
    value = min_snr(sc, pose, trial);
    if (value >= incumbent)
        current = trial;

    return current;
}

} // namespace a6d
