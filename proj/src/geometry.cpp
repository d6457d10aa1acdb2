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

#include "geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace a6d
{

bool angles_in_range(const EulerAngles &a)
{
    const double lim = pi / 2.0;
    return a.psi_z >= -lim && a.psi_z <= lim && a.psi_y >= -lim && a.psi_y <= lim &&
           a.psi_x >= -lim && a.psi_x <= lim;
}

Mat3 rotation_matrix(const EulerAngles &a)
{
    const double cz = std::cos(a.psi_z), sz = std::sin(a.psi_z);
    const double cy = std::cos(a.psi_y), sy = std::sin(a.psi_y);
    const double cx = std::cos(a.psi_x), sx = std::sin(a.psi_x);

    Mat3 r;
    r << cz * cy, cz * sy * sx - sz * cx, cz * sy * cx + sz * sx, //
        sz * cy, sz * sy * sx + cz * cx, sz * sy * cx - cz * sx,  //
        -sy, cy * sx, cy * cx;
    return r;
}

Vec3 to_local(const Vec3 &point, const Pose &pose)
{
    return rotation_matrix(pose.angles).transpose() * (point - pose.position);
}

DirectionCosines surface_normal(const EulerAngles &a)
{
    const double cz = std::cos(a.psi_z), sz = std::sin(a.psi_z);
    const double cy = std::cos(a.psi_y), sy = std::sin(a.psi_y);
    const double cx = std::cos(a.psi_x), sx = std::sin(a.psi_x);
    return {cz * sy * cx + sz * sx, sz * sy * cx - cz * sx, cy * cx};
}

namespace
{

// Spherical angles of a propagation direction expressed in the local frame.
LinkAngles::Side side_angles(const Vec3 &local_dir)
{
    LinkAngles::Side s;
    s.distance = local_dir.norm();
    if (!(s.distance > 0.0))
        throw std::invalid_argument("link_angles: surface position coincides with an endpoint");
    s.elevation = std::acos(std::clamp(local_dir.z() / s.distance, -1.0, 1.0));
    s.azimuth = std::atan2(local_dir.y(), local_dir.x());
    return s;
}

} // namespace

LinkAngles link_angles(const Scenario &sc, const Pose &pose)
{
    // The isotropic reference mode ignores the pose's orientation entirely.
    const EulerAngles eff = sc.isotropic ? EulerAngles{} : pose.angles;
    const Mat3 rt = rotation_matrix(eff).transpose();

    LinkAngles out;

    // Arrival: wave travels from the BS towards the surface.
    const Vec3 from_bs = pose.position - sc.bs;
    out.bs = side_angles(rt * from_bs);
    out.incident_cos = std::cos(out.bs.elevation);
    out.bs_axis_cos = from_bs.x() / out.bs.distance; // BS array lies along global x

    // Departure: wave travels from the surface towards each user. The
    // reflection angle is measured against the surface normal, so its cosine
    // is the negated z direction cosine of the departing ray.
    out.users.reserve(sc.users.size());
    out.reflect_cos.reserve(sc.users.size());
    for (const Vec3 &w : sc.users)
    {
        const Vec3 to_user = w - pose.position;
        LinkAngles::Side s = side_angles(rt * to_user);
        out.reflect_cos.push_back(-std::cos(s.elevation));
        out.users.push_back(s);
    }
    return out;
}

double effective_aperture_gain(const Scenario &sc, const Pose &pose, int user)
{
    if (user < 0 || user >= static_cast<int>(sc.users.size()))
        throw std::invalid_argument("effective_aperture_gain: user index out of range");
    if (sc.isotropic)
        return 1.0;

    const DirectionCosines n = surface_normal(pose.angles);
    const Vec3 l(n.l1, n.l2, n.l3);

    const Vec3 from_bs = pose.position - sc.bs;
    const double r1 = from_bs.norm();
    const Vec3 from_user = pose.position - sc.users[static_cast<std::size_t>(user)];
    const double r2 = from_user.norm();
    if (!(r1 > 0.0) || !(r2 > 0.0))
        throw std::invalid_argument("effective_aperture_gain: surface coincides with an endpoint");

    const double cos_in = from_bs.dot(l) / r1;
    const double cos_out = from_user.dot(l) / r2;
    if (cos_in < 0.0 || cos_out < 0.0)
        return 0.0; // a ray would hit the back of the surface
    return cos_in * cos_out;
}

bool reflection_feasible(const Scenario &sc, const Pose &pose)
{
    if (sc.isotropic)
        return true;

    // Both cosines must be nonnegative for every user; checking the sign of
    // their product is wrong (two negatives pass). Grazing poses (cos = 0)
    // count as feasible with zero gain.
    const DirectionCosines n = surface_normal(pose.angles);
    const Vec3 nv(n.l1, n.l2, n.l3);
    const Vec3 from_bs = pose.position - sc.bs;
    if (from_bs.dot(nv) < 0.0)
        return false;
    for (const Vec3 &w : sc.users)
        if ((pose.position - w).dot(nv) < 0.0)
            return false;
    return true;
}

} // namespace a6d
