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

#include <string>
#include <vector>

#include "mathfwd.hpp"

namespace a6d
{

// Radio-side constants. All power-like members are linear (watts or plain
// ratios); conversions from dB/dBm happen in the config layer.
struct SystemParams
{
    double wavelength = 0.1;       // carrier wavelength [m]; enters only via spacing/wavelength ratios
    double tx_spacing = 0.05;      // BS antenna spacing [m], half wavelength by default
    double element_spacing = 0.05; // reflecting-element spacing [m], half wavelength by default
    int bs_antennas = 64;          // BS uniform linear array size
    int elements_x = 16;           // reflecting elements along the local x axis
    int elements_y = 16;           // reflecting elements along the local y axis
    double ref_path_gain = 1e-4;   // channel power gain at 1 m reference distance [linear]
    double tx_power = 0.1;         // transmit power [W]
    double noise_power = 1e-14;    // receiver noise power [W]

    int element_count() const { return elements_x * elements_y; }
    double snr_scale() const { return tx_power / noise_power; }

    // Throws std::invalid_argument on non-physical values.
    void validate() const;
};

// Axis-aligned horizontal placement region for the surface projection.
struct Region
{
    double x_min = -140.0;
    double x_max = 790.0;
    double y_min = -58.0;
    double y_max = 298.0;

    double width() const { return x_max - x_min; }
    double height() const { return y_max - y_min; }
    bool contains(double x, double y) const
    {
        return x >= x_min && x <= x_max && y >= y_min && y <= y_max;
    }

    void validate() const;
};

// One downlink setup: a base station at the origin, ground users at z = 0, and
// a reflecting surface flying at fixed altitude inside `region`.
//
// With `isotropic` set the surface acts as an orientation-less reference
// reflector: the effective aperture gain is pinned to one and all link angles
// are evaluated at the reference orientation regardless of the pose's Euler
// angles. This provides the performance upper bound used by the benchmarks.
struct Scenario
{
    std::string id = "scenario";
    Vec3 bs = Vec3::Zero();  // base-station position; ground level
    std::vector<Vec3> users; // user positions; z must be 0
    double altitude = 100.0; // surface flight altitude [m]
    Region region;
    SystemParams params;
    bool isotropic = false;

    void validate() const;
};

} // namespace a6d
