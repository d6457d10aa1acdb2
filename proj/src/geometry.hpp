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

#pragma once

#include <vector>

#include "mathfwd.hpp"
#include "scenario.hpp"

namespace a6d
{

// Euler rotation angles about the global z, y and x axes, applied in that
// order. Each angle is restricted to [-pi/2, pi/2].
struct EulerAngles
{
    double psi_z = 0.0;
    double psi_y = 0.0;
    double psi_x = 0.0;
};

// Position plus orientation of the reflecting surface. The surface plane spans
// the local x/y axes; the local z axis is its normal.
struct Pose
{
    Vec3 position = Vec3::Zero();
    EulerAngles angles;
};

// Global-frame components of the surface normal (local z axis).
struct DirectionCosines
{
    double l1 = 0.0;
    double l2 = 0.0;
    double l3 = 1.0;
};

bool angles_in_range(const EulerAngles &a);

// Composite rotation R = Rz(psi_z) * Ry(psi_y) * Rx(psi_x); proper rotation
// matrix (orthonormal, det = +1).
Mat3 rotation_matrix(const EulerAngles &a);

// Express a global point in the surface-local frame: R^T * (point - pose.position).
Vec3 to_local(const Vec3 &point, const Pose &pose);

// Third column of the rotation matrix. Satisfies l1^2 + l2^2 + l3^2 = 1 and,
// for in-range angles, l3 >= 0 and l1^2 + l3^2 <= 1.
DirectionCosines surface_normal(const EulerAngles &a);

// Spherical departure/arrival geometry of one surface pose, as needed by the
// steering vectors. Elevation is the polar angle from the local z axis
// (0 = boresight); azimuth is measured in the local x/y plane with atan2.
struct LinkAngles
{
    struct Side
    {
        double elevation = 0.0;
        double azimuth = 0.0;
        double distance = 0.0;
    };

    Side bs;             // arrival from the base station
    double bs_axis_cos;  // cosine of the departure angle along the BS array axis (global x)
    double incident_cos; // cosine of the incidence angle at the surface, = cos(bs.elevation)
    std::vector<Side> users;          // departure towards each user
    std::vector<double> reflect_cos;  // cosine of the reflection angle per user, = -cos(users[l].elevation)
};

// Computes all link angles for a pose. Honors the scenario's isotropic flag by
// evaluating at the reference orientation. Throws std::invalid_argument when
// the surface position coincides with the BS or a user.
LinkAngles link_angles(const Scenario &sc, const Pose &pose);

// Effective aperture gain for one user: product of incidence and reflection
// cosines when both are nonnegative, otherwise 0 (the surface cannot serve the
// user from that side). Returns 1 under the isotropic flag.
double effective_aperture_gain(const Scenario &sc, const Pose &pose, int user);

// True when every user sees a nonnegative incidence and reflection cosine.
bool reflection_feasible(const Scenario &sc, const Pose &pose);

} // namespace a6d
