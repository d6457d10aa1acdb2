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

// Steering vector of the BS uniform linear array for a departure direction
// with cosine `axis_cos` along the array axis. Entries are unit modulus with
// squared norm equal to the antenna count.
CVec bs_steering(double axis_cos, const SystemParams &p);

// Separable response of the rectangular surface array. The full array vector
// is the Kronecker product x (x) y with flat index n = ix * elements_y + iy.
struct AxisResponse
{
    CVec x;
    CVec y;
};

// Response for a wave arriving at the surface from direction `side`
// (elevation measured from the local normal, azimuth in the surface plane).
AxisResponse surface_rx_steering(const LinkAngles::Side &side, const SystemParams &p);

// Response for a wave departing from the surface towards direction `side`.
// Same phase law as reception; kept separate to mirror the two link ends.
AxisResponse surface_tx_steering(const LinkAngles::Side &side, const SystemParams &p);

// Per-axis composite cascade response of one user: departure response times
// conjugated arrival response, elementwise. Entries are unit modulus and form
// a geometric sequence whose first entry is 1.
AxisResponse composite_response(const LinkAngles &link, int user, const SystemParams &p);

// Unit-modulus reflection phase profile, separable across the two axes. The
// full profile is the Kronecker product x (x) y.
struct PhaseProfile
{
    CVec x;
    CVec y;

    static PhaseProfile uniform(const SystemParams &p); // all-ones profile
};

// Phase profile aligned to one user's composite response; maximizes that
// user's passive beamforming gain at value (elements_x * elements_y)^2.
PhaseProfile inphase_profile(const LinkAngles &link, int user, const SystemParams &p);

// |f_axis^H theta_axis|^2 for one axis.
double axis_gain(const CVec &f_axis, const CVec &theta_axis);

// Full passive beamforming gain: product of the two axis gains. Bounded by
// the squared element count for unit-modulus profiles.
double beamforming_gain(const AxisResponse &f, const PhaseProfile &t);

// Kronecker product helper mapping separable factors to the flat array index.
CVec kron_xy(const CVec &x, const CVec &y);

// Multiplicative decomposition of one user's receive SNR.
struct SnrTerms
{
    bool feasible = false; // both link cosines nonnegative (always true when isotropic)
    double bs_path = 0.0;  // power gain BS -> surface, ref_path_gain / r1^2
    double user_path = 0.0;
    double aperture = 0.0; // effective aperture gain, 0 when infeasible
    double bf_gain = 0.0;  // passive beamforming gain
    double snr = 0.0;      // linear SNR with matched-filter BS precoding

    double snr_db() const;
};

// Per-user SNR decomposition at a pose under a fixed phase profile. The BS
// precoder is the matched filter, contributing a factor of the antenna count.
std::vector<SnrTerms> evaluate_users(const Scenario &sc, const Pose &pose,
                                     const PhaseProfile &t);

SnrTerms user_snr(const Scenario &sc, const Pose &pose, const PhaseProfile &t, int user);

// Smallest user SNR (linear); 0 when any user is infeasible at the pose.
double min_snr(const Scenario &sc, const Pose &pose, const PhaseProfile &t);

// Test support: explicit cascaded-channel factors including the absolute
// phase terms which cancel in the SNR. Dimensions: N x M and N.
CMat bs_surface_channel(const Scenario &sc, const Pose &pose);
CVec surface_user_channel(const Scenario &sc, const Pose &pose, int user);

} // namespace a6d
