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

#include "gibbs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "errors.hpp"
#include "rng.hpp"

namespace a6d
{

namespace
{

constexpr double k_floor_db = -300.0;

int axis_count(double range, double step)
{
    // Small slack so an exactly divisible range is not undercounted by fp.
    return int(std::floor(range / step + 1e-9)) + 1;
}

int snap_axis(double value, double lo, double step, int count)
{
    const int raw = int(std::llround((value - lo) / step));
    return std::clamp(raw, 0, count - 1);
}

double candidate_db(double snr)
{
    if (!(snr > 0.0))
        return k_floor_db;
    return std::max(k_floor_db, 10.0 * std::log10(snr));
}

GsCandidate make_candidate(const GridIndex &g, const Scenario &sc,
                           const PhaseProfile &profile, const PoseGrid &grid)
{
    GsCandidate c;
    c.index = g;
    c.pose = grid.pose(g);
    c.snr = min_snr(sc, c.pose, profile);
    c.snr_db = candidate_db(c.snr);
    return c;
}

} // namespace

PoseGrid PoseGrid::make(const Region &region, double altitude,
                        double location_step, double orientation_step)
{
    region.validate();
    if (!(location_step > 0.0) || !(orientation_step > 0.0))
        throw ConfigError("pose grid steps must be positive");
    PoseGrid g;
    g.region = region;
    g.altitude = altitude;
    g.location_step = location_step;
    g.orientation_step = orientation_step;
    g.nx = axis_count(region.width(), location_step);
    g.ny = axis_count(region.height(), location_step);
    g.na = axis_count(pi, orientation_step);
    return g;
}

std::uint64_t PoseGrid::total() const
{
    const std::uint64_t a = std::uint64_t(na);
    return std::uint64_t(nx) * std::uint64_t(ny) * a * a * a;
}

GridIndex PoseGrid::clamped(GridIndex g) const
{
    g.ix = std::clamp(g.ix, 0, nx - 1);
    g.iy = std::clamp(g.iy, 0, ny - 1);
    g.ipz = std::clamp(g.ipz, 0, na - 1);
    g.ipy = std::clamp(g.ipy, 0, na - 1);
    g.ipx = std::clamp(g.ipx, 0, na - 1);
    return g;
}

GridIndex PoseGrid::snap(const Pose &pose) const
{
    GridIndex g;
    g.ix = snap_axis(pose.position.x(), region.x_min, location_step, nx);
    g.iy = snap_axis(pose.position.y(), region.y_min, location_step, ny);
    g.ipz = snap_axis(pose.angles.psi_z, -pi / 2, orientation_step, na);
    g.ipy = snap_axis(pose.angles.psi_y, -pi / 2, orientation_step, na);
    g.ipx = snap_axis(pose.angles.psi_x, -pi / 2, orientation_step, na);
    return g;
}

Pose PoseGrid::pose(const GridIndex &g) const
{
    auto axis = [](int k, double lo, double step, double hi) {
        return std::min(lo + k * step, hi);
    };
    Pose p;
    p.position = Vec3(axis(g.ix, region.x_min, location_step, region.x_max),
                      axis(g.iy, region.y_min, location_step, region.y_max),
                      altitude);
    p.angles.psi_z = axis(g.ipz, -pi / 2, orientation_step, pi / 2);
    p.angles.psi_y = axis(g.ipy, -pi / 2, orientation_step, pi / 2);
    p.angles.psi_x = axis(g.ipx, -pi / 2, orientation_step, pi / 2);
    return p;
}

void GsOptions::validate() const
{
    if (iterations < 1)
        throw ConfigError("exploration needs at least one iteration");
    if (candidates < 11)
        throw ConfigError("candidate batch must exceed the 10 fixed neighbors");
    if (!(softmax_scale >= 0.0))
        throw ConfigError("softmax scale must be nonnegative");
    if (!(location_step > 0.0) || !(orientation_step > 0.0))
        throw ConfigError("exploration grid steps must be positive");
    if (!(revisit_penalty_db >= 0.0))
        throw ConfigError("revisit penalty must be nonnegative");
}

void VisitedSet::append(const GridIndex &g)
{
    order.push_back(g);
    members.insert(g);
}

bool VisitedSet::contains(const GridIndex &g) const
{
    return members.count(g) != 0;
}

std::array<GridIndex, 10> neighbor_set(const GridIndex &u, const PoseGrid &grid)
{
    std::array<GridIndex, 10> out;
    auto bump = [&](int slot, int GridIndex::*field, int delta) {
        GridIndex g = u;
        g.*field += delta;
        out[slot] = grid.clamped(g);
    };
    bump(0, &GridIndex::ix, +1);
    bump(1, &GridIndex::ix, -1);
    bump(2, &GridIndex::iy, +1);
    bump(3, &GridIndex::iy, -1);
    bump(4, &GridIndex::ipz, +1);
    bump(5, &GridIndex::ipz, -1);
    bump(6, &GridIndex::ipy, +1);
    bump(7, &GridIndex::ipy, -1);
    bump(8, &GridIndex::ipx, +1);
    bump(9, &GridIndex::ipx, -1);
    return out;
}

std::vector<GridIndex> random_jumps(const std::vector<GridIndex> &exclude,
                                    int count, const PoseGrid &grid,
                                    std::mt19937_64 &rng)
{
    std::vector<GridIndex> out;
    if (count <= 0)
        return out;
    std::set<GridIndex> seen(exclude.begin(), exclude.end());
    if (std::uint64_t(count) > grid.total() - std::min<std::uint64_t>(
                                                  grid.total(), seen.size()))
        throw ConfigError("jump count exceeds the number of distinct grid poses");
    out.reserve(std::size_t(count));
    long attempts = 0;
    const long max_attempts = 100000 + 1000L * count;
    while (int(out.size()) < count)
    {
        if (++attempts > max_attempts)
            throw SolverError("random jump sampling failed to find free poses");
        GridIndex g;
        g.ix = int(uniform_below(rng, std::uint64_t(grid.nx)));
        g.iy = int(uniform_below(rng, std::uint64_t(grid.ny)));
        g.ipz = int(uniform_below(rng, std::uint64_t(grid.na)));
        g.ipy = int(uniform_below(rng, std::uint64_t(grid.na)));
        g.ipx = int(uniform_below(rng, std::uint64_t(grid.na)));
        if (seen.insert(g).second)
            out.push_back(g);
    }
    return out;
}

std::vector<double> transition_probs(const std::vector<GsCandidate> &candidates,
                                     const VisitedSet &visited,
                                     const GsOptions &opt)
{
    if (candidates.empty())
        throw std::invalid_argument("transition_probs: no candidates");
    std::vector<double> w(candidates.size());
    double top = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < candidates.size(); ++i)
    {
        double db = candidates[i].snr_db;
        if (visited.contains(candidates[i].index))
            db -= opt.revisit_penalty_db;
        w[i] = opt.softmax_scale * db;
        top = std::max(top, w[i]);
    }
    double sum = 0.0;
    for (double &v : w)
    {
        v = std::exp(v - top);
        sum += v;
    }
    for (double &v : w)
        v /= sum;
    return w;
}

std::size_t select_candidate(const std::vector<double> &probs, double p)
{
    if (probs.empty())
        throw std::invalid_argument("select_candidate: empty distribution");
    double cum = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i)
    {
        cum += probs[i];
        if (p <= cum)
            return i;
    }
    return probs.size() - 1; // fp guard: cumulative sum fell short of 1
}

GsCandidate gs_step(GridIndex &current, VisitedSet &visited, const Scenario &sc,
                    const PhaseProfile &profile, const PoseGrid &grid,
                    const GsOptions &opt, std::mt19937_64 &rng)
{
    const std::array<GridIndex, 10> neighbors = neighbor_set(current, grid);
    const std::vector<GridIndex> exclude(neighbors.begin(), neighbors.end());
    const std::vector<GridIndex> jumps =
        random_jumps(exclude, opt.candidates - 10, grid, rng);

    std::vector<GsCandidate> batch;
    batch.reserve(std::size_t(opt.candidates));
    for (const GridIndex &g : neighbors)
        batch.push_back(make_candidate(g, sc, profile, grid));
    for (const GridIndex &g : jumps)
        batch.push_back(make_candidate(g, sc, profile, grid));

    const std::vector<double> probs = transition_probs(batch, visited, opt);
    const std::size_t pick = select_candidate(probs, uniform01(rng));
    visited.append(batch[pick].index);
    current = batch[pick].index;
    return batch[pick];
}

GsResult gs_phase(const Scenario &sc, const Pose &start,
                  const PhaseProfile &profile, const GsOptions &opt,
                  std::mt19937_64 &rng)
{
    opt.validate();
    const PoseGrid grid = PoseGrid::make(sc.region, sc.altitude,
                                         opt.location_step, opt.orientation_step);

    GsResult best;
    best.pose = start;
    best.snr = min_snr(sc, start, profile);
    best.snr_db = candidate_db(best.snr);
    if (!(best.snr > 0.0))
        throw InfeasiblePoseError("exploration requires a feasible start pose");

    GridIndex current = grid.snap(start);
    VisitedSet visited;
    for (int t = 0; t < opt.iterations; ++t)
    {
        const GsCandidate picked =
            gs_step(current, visited, sc, profile, grid, opt, rng);
        if (picked.snr > best.snr)
        {
            best.pose = picked.pose;
            best.snr = picked.snr;
            best.snr_db = picked.snr_db;
        }
    }
    return best;
}

} // namespace a6d
