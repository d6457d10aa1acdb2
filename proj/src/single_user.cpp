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

#include "single_user.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace a6d
{

namespace
{

double snr_const(const SystemParams &p)
{
    const double n = static_cast<double>(p.element_count());
    return p.snr_scale() * p.ref_path_gain * p.ref_path_gain *
           static_cast<double>(p.bs_antennas) * n * n;
}

double r1sq(double qx, const SingleUserCase &c) { return qx * qx + c.altitude * c.altitude; }

double r2sq(double qx, const SingleUserCase &c)
{
    const double dx = qx - c.bs_user_distance;
    return dx * dx + c.altitude * c.altitude;
}

} // namespace

SingleUserCase SingleUserCase::standard(double d, double h, const SystemParams &p)
{
    SingleUserCase c;
    c.bs_user_distance = d;
    c.altitude = h;
    c.qx_min = -0.2 * d;
    c.qx_max = 1.2 * d;
    c.params = p;
    c.validate();
    return c;
}

Scenario SingleUserCase::to_scenario(bool isotropic) const
{
    Scenario sc;
    sc.id = "single";
    sc.users = {Vec3(bs_user_distance, 0.0, 0.0)};
    sc.altitude = altitude;
    sc.region = {qx_min, qx_max, 0.0, 0.0};
    sc.params = params;
    sc.isotropic = isotropic;
    return sc;
}

void SingleUserCase::validate() const
{
    params.validate();
    if (!(bs_user_distance > 0.0))
        throw std::invalid_argument("SingleUserCase: BS-user distance must be positive");
    if (!(altitude > 0.0))
        throw std::invalid_argument("SingleUserCase: altitude must be positive");
    if (!(qx_min <= qx_max))
        throw std::invalid_argument("SingleUserCase: empty placement interval");
}

double bs_tilt_angle(double qx, const SingleUserCase &c)
{
    return std::acos(qx / std::sqrt(r1sq(qx, c)));
}

double user_tilt_angle(double qx, const SingleUserCase &c)
{
    const double dx = qx - c.bs_user_distance;
    return std::acos(dx / std::sqrt(r2sq(qx, c)));
}

double snr_1d(double qx, double psi_y, const SingleUserCase &c)
{
    const double s1 = std::sin(psi_y + bs_tilt_angle(qx, c));
    const double s2 = std::sin(psi_y + user_tilt_angle(qx, c));
    if (s1 < 0.0 || s2 < 0.0)
        return 0.0;
    return snr_const(c.params) * s1 * s2 / (r1sq(qx, c) * r2sq(qx, c));
}

double optimal_pitch(double qx, const SingleUserCase &c)
{
    const double u1 = qx / std::sqrt(r1sq(qx, c));
    const double u2 = (qx - c.bs_user_distance) / std::sqrt(r2sq(qx, c));
    // Identical to (pi - acos(u1) - acos(u2)) / 2 but exactly zero at the
    // midpoint, where u2 == -u1 bitwise.
    return (std::acos(-u2) - std::acos(u1)) / 2.0;
}

double snr_pitch_optimal(double qx, const SingleUserCase &c)
{
    const double a = r1sq(qx, c);
    const double b = r2sq(qx, c);
    const double cos_delta =
        (qx * (qx - c.bs_user_distance) + c.altitude * c.altitude) / std::sqrt(a * b);
    return snr_const(c.params) * (1.0 + cos_delta) / (2.0 * a * b);
}

double isotropic_snr(double qx, const SingleUserCase &c)
{
    return snr_const(c.params) / (r1sq(qx, c) * r2sq(qx, c));
}

std::vector<double> iso_optimal_qx(double d, double h)
{
    if (!(d > 0.0) || !(h > 0.0))
        throw std::invalid_argument("iso_optimal_qx: D and H must be positive");
    if (d <= 2.0 * h)
        return {d / 2.0};
    const double s = std::sqrt(d * d / 4.0 - h * h);
    return {d / 2.0 - s, d / 2.0 + s};
}

JointResult solve_joint(const SingleUserCase &c, int grid_points)
{
    c.validate();
    if (grid_points < 2)
        throw std::invalid_argument("solve_joint: need at least two grid points");
    const double step = (c.qx_max - c.qx_min) / static_cast<double>(grid_points - 1);
    double best_qx = c.qx_min;
    double best = -1.0;
    for (int i = 0; i < grid_points; ++i)
    {
        const double qx = c.qx_min + step * static_cast<double>(i);
        const double v = snr_pitch_optimal(qx, c);
        if (v > best)
        {
            best = v;
            best_qx = qx;
        }
    }
    return {best_qx, optimal_pitch(best_qx, c), best};
}

JointResult orientation_only(const SingleUserCase &c)
{
    c.validate();
    const double qx = iso_optimal_qx(c.bs_user_distance, c.altitude).front();
    return {qx, optimal_pitch(qx, c), snr_pitch_optimal(qx, c)};
}

JointResult location_only(const SingleUserCase &c, int grid_points)
{
    c.validate();
    if (grid_points < 2)
        throw std::invalid_argument("location_only: need at least two grid points");
    const double step = (c.qx_max - c.qx_min) / static_cast<double>(grid_points - 1);
    double best_qx = c.qx_min;
    double best = -1.0;
    for (int i = 0; i < grid_points; ++i)
    {
        const double qx = c.qx_min + step * static_cast<double>(i);
        const double v = snr_1d(qx, 0.0, c);
        if (v > best)
        {
            best = v;
            best_qx = qx;
        }
    }
    return {best_qx, 0.0, best};
}

JointResult isotropic_bound(const SingleUserCase &c)
{
    c.validate();
    const double qx = iso_optimal_qx(c.bs_user_distance, c.altitude).front();
    return {qx, 0.0, isotropic_snr(qx, c)};
}

EulerAngles reduce_orientation(const EulerAngles &a)
{
    if (!angles_in_range(a))
        throw std::invalid_argument("reduce_orientation: angles outside [-pi/2, pi/2]");
    const DirectionCosines n = surface_normal(a);
    const double s = std::hypot(n.l1, n.l3);
    if (s == 0.0)
        return {0.0, 0.0, pi / 2.0}; // surface edge-on to the plane; zero gain either way
    const double psi_y = std::asin(std::clamp(n.l1 / s, -1.0, 1.0));
    const double psi_x = std::acos(std::clamp(s, 0.0, 1.0));
    return {0.0, psi_y, psi_x};
}

} // namespace a6d
