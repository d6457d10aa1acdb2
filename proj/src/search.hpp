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

#include <functional>

#include "channel.hpp"
#include "geometry.hpp"
#include "scenario.hpp"

namespace a6d
{

// Two-level (coarse then fine) grid maximization. The coarse stage scores the
// centers of a uniform cell tiling; the fine stage scores a uniform sub-tiling
// of the winning cell plus the winning center itself, so the final score
// never falls below the best coarse score. Scores <= 0 mean "infeasible";
// ties resolve to the lowest linear index (row-major, x fastest).

struct GridSpec2
{
    int nx = 100;
    int ny = 100;
    void validate() const; // throws std::invalid_argument unless both >= 1
};

struct GridSpec3
{
    int nz = 60;
    int ny = 60;
    int nx = 60;
    void validate() const;
};

struct LocationSearchOptions
{
    GridSpec2 coarse{};
    GridSpec2 fine{};
};

struct OrientationSearchOptions
{
    GridSpec3 coarse{60, 60, 60};
    GridSpec3 fine{3, 3, 3};
};

// Center of cell k among n uniform cells tiling [lo, hi]; for the angle range
// [-pi/2, pi/2] this is pi (2k + 1 - n) / (2n). Throws std::out_of_range.
double axis_cell_center(int k, int n, double lo, double hi);

// Center of the (kz, ky, kx) cuboid tiling [-pi/2, pi/2]^3, linearized
// row-major as (kz * ny + ky) * nx + kx.
EulerAngles orientation_cell_center(int kz, int ky, int kx, const GridSpec3 &spec);

struct LocationOutcome
{
    double x = 0.0;
    double y = 0.0;
    double score = 0.0;
    bool feasible = false; // false: nothing scored > 0; incumbent returned
};

struct OrientationOutcome
{
    EulerAngles angles;
    double score = 0.0;
    bool feasible = false;
};

LocationOutcome search_location(const Region &region,
                                const std::function<double(double, double)> &score,
                                double incumbent_x, double incumbent_y,
                                double incumbent_score,
                                const LocationSearchOptions &opt);

OrientationOutcome
search_orientation(const std::function<double(const EulerAngles &)> &score,
                   const EulerAngles &incumbent, double incumbent_score,
                   const OrientationSearchOptions &opt);

// Location stage of the alternating loop: maximizes the multicast (minimum
// user) SNR over surface positions at the scenario altitude with orientation
// and phase profile fixed; the current pose is the incumbent.
LocationOutcome optimize_location(const Scenario &sc, const Pose &pose,
                                  const PhaseProfile &profile,
                                  const LocationSearchOptions &opt);

// Orientation stage: same, over Euler angles at a fixed position.
OrientationOutcome optimize_orientation(const Scenario &sc, const Pose &pose,
                                        const PhaseProfile &profile,
                                        const OrientationSearchOptions &opt);

} // namespace a6d
