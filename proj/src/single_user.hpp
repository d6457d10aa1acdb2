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

#include "geometry.hpp"
#include "mathfwd.hpp"
#include "scenario.hpp"

namespace a6d
{

// Reduced single-user setup: BS at the origin, one user at (D, 0, 0), surface
// constrained to the vertical plane y = 0 at altitude H with position
// qx in [qx_min, qx_max]. In this plane the only orientation degree of
// freedom that matters is the pitch angle about y.
struct SingleUserCase
{
    double bs_user_distance = 500.0; // D [m]
    double altitude = 100.0;         // H [m]
    double qx_min = -100.0;
    double qx_max = 600.0;
    SystemParams params;

    // Standard placement interval [-0.2 D, 1.2 D].
    static SingleUserCase standard(double d, double h, const SystemParams &p);

    Scenario to_scenario(bool isotropic = false) const;
    void validate() const;
};

// Polar angle of the surface position as seen against the x axis from the BS
// side: acos(qx / sqrt(qx^2 + H^2)), in [0, pi].
double bs_tilt_angle(double qx, const SingleUserCase &c);

// Same angle measured against the user: acos((qx - D) / sqrt((qx-D)^2 + H^2)).
double user_tilt_angle(double qx, const SingleUserCase &c);

// SNR with an in-phase profile at position qx and pitch psi_y; the aperture
// term is sin(psi_y + bs_tilt) * sin(psi_y + user_tilt), and the value is 0
// whenever either factor is negative (infeasible side).
double snr_1d(double qx, double psi_y, const SingleUserCase &c);

// Pitch maximizing snr_1d at fixed qx. Antisymmetric about qx = D/2 and
// exactly 0 at qx = D/2. Computed in the form
//   (acos(-u2) - acos(u1)) / 2,   u1 = qx/r1, u2 = (qx-D)/r2,
// which is bitwise zero at the midpoint.
double optimal_pitch(double qx, const SingleUserCase &c);

// snr_1d at the optimal pitch; closed form
//   C * (1 + cosDelta) / (2 r1^2 r2^2),  cosDelta = (qx(qx-D) + H^2)/(r1 r2).
double snr_pitch_optimal(double qx, const SingleUserCase &c);

// SNR of the orientation-less reference reflector at position qx.
double isotropic_snr(double qx, const SingleUserCase &c);

// Positions minimizing the product of squared link distances
// (qx^2 + H^2)((qx - D)^2 + H^2): {D/2} when D <= 2H, otherwise the two
// symmetric roots D/2 -+ sqrt(D^2/4 - H^2) in ascending order.
std::vector<double> iso_optimal_qx(double d, double h);

struct JointResult
{
    double qx = 0.0;
    double psi_y = 0.0;
    double snr = 0.0; // linear
};

// Pitch-optimal SNR maximized over a uniform qx grid (both interval endpoints
// included); ties break to the lowest grid index.
JointResult solve_joint(const SingleUserCase &c, int grid_points = 10000);

// Benchmarks: position pinned to the smaller isotropic-optimal root with
// closed-form pitch (orientation_only); pitch pinned to 0 with the position
// searched on a grid (location_only); orientation-less bound (isotropic).
JointResult orientation_only(const SingleUserCase &c);
JointResult location_only(const SingleUserCase &c, int grid_points = 10000);
JointResult isotropic_bound(const SingleUserCase &c);

// Collapses a full Euler triple to an equivalent (0, psi_y, psi_x) triple
// preserving the (l1, l3) direction cosines, hence the aperture gain of any
// y = 0 single-user geometry. Degenerate l1 = l3 = 0 maps to (0, 0, pi/2).
// Throws std::invalid_argument when the input angles are out of range.
EulerAngles reduce_orientation(const EulerAngles &a);

} // namespace a6d
