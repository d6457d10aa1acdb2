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
//
// Sampling-based pose exploration. A Markov chain walks a regular grid over
// (location, orientation); each step scores a batch of neighbor and random-jump
// candidates, forms a softmax transition kernel over their worst-user SNRs
// (with a revisit penalty), and draws the next state by inverse CDF. The best
// state ever visited, including the continuous starting pose, is returned.

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "channel.hpp"
#include "geometry.hpp"
#include "scenario.hpp"

namespace a6d
{

// Grid coordinates of a pose: x, y location indices and one index per Euler
// angle axis (yaw ipz, pitch ipy, roll ipx).
struct GridIndex
{
    int ix = 0;
    int iy = 0;
    int ipz = 0;
    int ipy = 0;
    int ipx = 0;

    auto operator<=>(const GridIndex &) const = default;
};

// Regular pose grid: locations step over the service region at a fixed
// altitude, angles step over [-pi/2, pi/2] on all three axes.
struct PoseGrid
{
    Region region;
    double altitude = 0.0;
    double location_step = 0.0;
    double orientation_step = 0.0;
    int nx = 0;
    int ny = 0;
    int na = 0; // shared by the three angle axes

    static PoseGrid make(const Region &region, double altitude,
                         double location_step, double orientation_step);

    std::uint64_t total() const;
    GridIndex clamped(GridIndex g) const;
    GridIndex snap(const Pose &pose) const;
    Pose pose(const GridIndex &g) const;
};

struct GsOptions
{
    int iterations = 400;              // chain length T
    int candidates = 30;               // batch size I per step, at least 11
    double softmax_scale = 20.0;       // kernel weight per dB
    double location_step = 5.0;        // meters
    double orientation_step = pi / 180; // radians
    double revisit_penalty_db = 3.0;
    std::uint64_t seed = 1;

    void validate() const;
};

struct GsCandidate
{
    GridIndex index;
    Pose pose;
    double snr = 0.0;
    double snr_db = 0.0;
};

// Chain history with exact-coordinate membership. Append-only.
struct VisitedSet
{
    std::vector<GridIndex> order;
    std::set<GridIndex> members;

    void append(const GridIndex &g);
    bool contains(const GridIndex &g) const;
};

struct GsResult
{
    Pose pose;
    double snr = 0.0;
    double snr_db = 0.0;
};

// The 10 single-step perturbations of u, in the fixed order
// +x, -x, +y, -y, +psi_z, -psi_z, +psi_y, -psi_y, +psi_x, -psi_x.
// Steps off the grid edge are truncated to the boundary, so entries may
// duplicate u or each other there.
std::array<GridIndex, 10> neighbor_set(const GridIndex &u, const PoseGrid &grid);

// `count` distinct grid poses drawn coordinate-wise uniformly (order: x, y,
// psi_z, psi_y, psi_x), rejecting members of `exclude` and earlier draws.
std::vector<GridIndex> random_jumps(const std::vector<GridIndex> &exclude,
                                    int count, const PoseGrid &grid,
                                    std::mt19937_64 &rng);

// Softmax over scale * snr_db with previously visited candidates docked by the
// revisit penalty. Infeasible candidates enter at the -300 dB floor. Never
// mutates the candidates' cached SNRs. Sums to 1 within 1e-12.
std::vector<double> transition_probs(const std::vector<GsCandidate> &candidates,
                                     const VisitedSet &visited,
                                     const GsOptions &opt);

// Inverse-CDF pick: smallest i with cumsum(probs[0..i]) >= p, for p in (0, 1].
std::size_t select_candidate(const std::vector<double> &probs, double p);

// One chain step from `current`: build the neighbor batch plus random jumps,
// score everything, draw the successor, append it to `visited` and advance
// `current`. Returns the selected candidate.
GsCandidate gs_step(GridIndex &current, VisitedSet &visited, const Scenario &sc,
                    const PhaseProfile &profile, const PoseGrid &grid,
                    const GsOptions &opt, std::mt19937_64 &rng);

// Full exploration phase: T steps from the snapped start. The returned pose is
// the best of all selected states and the exact (unsnapped) starting pose, so
// the result never scores below the input. Ties go to the earliest visit, with
// the starting pose first.
GsResult gs_phase(const Scenario &sc, const Pose &start,
                  const PhaseProfile &profile, const GsOptions &opt,
                  std::mt19937_64 &rng);

} // namespace a6d
