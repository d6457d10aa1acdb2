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

#include "channel.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace a6d
{

namespace
{

// Geometric phase ramp exp(-j * step * n), n = 0..count-1. One sincos plus a
// complex recurrence; drift is negligible for practical array sizes.
CVec phase_ramp(double step, int count)
{
    CVec v(count);
    const Cplx rot = std::polar(1.0, -step);
    Cplx cur(1.0, 0.0);
    for (int n = 0; n < count; ++n)
    {
        v[n] = cur;
        cur *= rot;
    }
    return v;
}

AxisResponse steering_for(const LinkAngles::Side &side, const SystemParams &p)
{
    const double se = std::sin(side.elevation);
    const double k = 2.0 * pi * p.element_spacing / p.wavelength;
    const double ux = se * std::cos(side.azimuth);
    const double uy = se * std::sin(side.azimuth);
    return {phase_ramp(k * ux, p.elements_x), phase_ramp(k * uy, p.elements_y)};
}

} // namespace

CVec bs_steering(double axis_cos, const SystemParams &p)
{
    if (axis_cos < -1.0 || axis_cos > 1.0)
        throw std::invalid_argument("bs_steering: cosine outside [-1, 1]");
    const double k = 2.0 * pi * p.tx_spacing / p.wavelength;
    return phase_ramp(k * axis_cos, p.bs_antennas);
}

AxisResponse surface_rx_steering(const LinkAngles::Side &side, const SystemParams &p)
{
    return steering_for(side, p);
}

AxisResponse surface_tx_steering(const LinkAngles::Side &side, const SystemParams &p)
{
    return steering_for(side, p);
}

AxisResponse composite_response(const LinkAngles &link, int user, const SystemParams &p)
{
    if (user < 0 || user >= static_cast<int>(link.users.size()))
        throw std::invalid_argument("composite_response: user index out of range");
    const AxisResponse rx = surface_rx_steering(link.bs, p);
    const AxisResponse tx = surface_tx_steering(link.users[static_cast<std::size_t>(user)], p);
    return {tx.x.cwiseProduct(rx.x.conjugate()), tx.y.cwiseProduct(rx.y.conjugate())};
}

PhaseProfile PhaseProfile::uniform(const SystemParams &p)
{
    return {CVec::Ones(p.elements_x), CVec::Ones(p.elements_y)};
}

PhaseProfile inphase_profile(const LinkAngles &link, int user, const SystemParams &p)
{
    AxisResponse f = composite_response(link, user, p);
    // Composite entries are unit modulus; normalizing guards against drift.
    for (int n = 0; n < f.x.size(); ++n)
        f.x[n] /= std::abs(f.x[n]);
    for (int n = 0; n < f.y.size(); ++n)
        f.y[n] /= std::abs(f.y[n]);
    return {f.x, f.y};
}

double axis_gain(const CVec &f_axis, const CVec &theta_axis)
{
    if (f_axis.size() != theta_axis.size())
        throw std::invalid_argument("axis_gain: size mismatch");
    return std::norm(f_axis.dot(theta_axis)); // dot() conjugates the left factor
}

double beamforming_gain(const AxisResponse &f, const PhaseProfile &t)
{
    return axis_gain(f.x, t.x) * axis_gain(f.y, t.y);
}

CVec kron_xy(const CVec &x, const CVec &y)
{
    CVec out(x.size() * y.size());
    for (int i = 0; i < x.size(); ++i)
        for (int j = 0; j < y.size(); ++j)
            out[i * y.size() + j] = x[i] * y[j];
    return out;
}

double SnrTerms::snr_db() const
{
    if (snr <= 0.0)
        return -std::numeric_limits<double>::infinity();
    return linear_to_db(snr);
}

std::vector<SnrTerms> evaluate_users(const Scenario &sc, const Pose &pose, const PhaseProfile &t)
{
    if (t.x.size() != sc.params.elements_x || t.y.size() != sc.params.elements_y)
        throw std::invalid_argument("evaluate_users: phase profile size mismatch");

    const LinkAngles link = link_angles(sc, pose);
    const AxisResponse rx = surface_rx_steering(link.bs, sc.params);
    const double m = static_cast<double>(sc.params.bs_antennas);
    const double scale = sc.params.snr_scale() * m;

    std::vector<SnrTerms> out(sc.users.size());
    for (std::size_t l = 0; l < sc.users.size(); ++l)
    {
        SnrTerms &s = out[l];
        const double r1 = link.bs.distance;
        const double r2 = link.users[l].distance;
        s.bs_path = sc.params.ref_path_gain / (r1 * r1);
        s.user_path = sc.params.ref_path_gain / (r2 * r2);
        s.feasible = sc.isotropic ||
                     (link.incident_cos >= 0.0 && link.reflect_cos[l] >= 0.0);
        s.aperture = sc.isotropic
                         ? 1.0
                         : (s.feasible ? link.incident_cos * link.reflect_cos[l] : 0.0);

        const AxisResponse tx = surface_tx_steering(link.users[l], sc.params);
        const AxisResponse f{tx.x.cwiseProduct(rx.x.conjugate()),
                             tx.y.cwiseProduct(rx.y.conjugate())};
        s.bf_gain = beamforming_gain(f, t);
        s.snr = scale * s.bs_path * s.user_path * s.aperture * s.bf_gain;
    }
    return out;
}

SnrTerms user_snr(const Scenario &sc, const Pose &pose, const PhaseProfile &t, int user)
{
    if (user < 0 || user >= static_cast<int>(sc.users.size()))
        throw std::invalid_argument("user_snr: user index out of range");
    return evaluate_users(sc, pose, t)[static_cast<std::size_t>(user)];
}

double min_snr(const Scenario &sc, const Pose &pose, const PhaseProfile &t)
{
    const std::vector<SnrTerms> all = evaluate_users(sc, pose, t);
    double best = std::numeric_limits<double>::infinity();
    for (const SnrTerms &s : all)
        best = std::min(best, s.snr);
    return best;
}

CMat bs_surface_channel(const Scenario &sc, const Pose &pose)
{
    const LinkAngles link = link_angles(sc, pose);
    const AxisResponse rx = surface_rx_steering(link.bs, sc.params);
    const CVec a_i = kron_xy(rx.x, rx.y);
    const CVec a_b = bs_steering(link.bs_axis_cos, sc.params);
    const double r1 = link.bs.distance;
    const Cplx phase = std::polar(std::sqrt(sc.params.ref_path_gain) / r1,
                                  -2.0 * pi * r1 / sc.params.wavelength);
    return phase * (a_i * a_b.adjoint());
}

CVec surface_user_channel(const Scenario &sc, const Pose &pose, int user)
{
    if (user < 0 || user >= static_cast<int>(sc.users.size()))
        throw std::invalid_argument("surface_user_channel: user index out of range");
    const LinkAngles link = link_angles(sc, pose);
    const AxisResponse tx =
        surface_tx_steering(link.users[static_cast<std::size_t>(user)], sc.params);
    const double r2 = link.users[static_cast<std::size_t>(user)].distance;
    const Cplx phase = std::polar(std::sqrt(sc.params.ref_path_gain) / r2,
                                  -2.0 * pi * r2 / sc.params.wavelength);
    return phase * kron_xy(tx.x, tx.y);
}

} // namespace a6d
