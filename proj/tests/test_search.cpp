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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <set>
#include <tuple>

#include "search.hpp"
#include "single_user.hpp"
#include "threads.hpp"

using namespace a6d;
using Catch::Approx;

TEST_CASE("argmax helper picks the highest score with lowest index ties")
{
    double best = 0.0;
    std::size_t idx = argmax_index(
        10, [](std::size_t i) { return (i % 2 == 0) ? std::nan("") : double(i); },
        &best);
    REQUIRE(idx == 9);
    REQUIRE(best == 9.0);

    idx = argmax_index(7, [](std::size_t) { return 3.5; }, &best);
    REQUIRE(idx == 0);
    REQUIRE(best == 3.5);

    idx = argmax_index(0, [](std::size_t) { return 1.0; }, &best);
    REQUIRE(idx == 0);
    REQUIRE(best == -std::numeric_limits<double>::infinity());
}

TEST_CASE("axis cell centers tile the interval uniformly")
{
    REQUIRE(axis_cell_center(0, 1, -pi / 2, pi / 2) == 0.0);
    REQUIRE(axis_cell_center(0, 4, -pi / 2, pi / 2) == Approx(-3 * pi / 8));
    REQUIRE(axis_cell_center(1, 4, -pi / 2, pi / 2) == Approx(-pi / 8));
    REQUIRE(axis_cell_center(2, 4, -pi / 2, pi / 2) == Approx(pi / 8));
    REQUIRE(axis_cell_center(3, 4, -pi / 2, pi / 2) == Approx(3 * pi / 8));
    for (int k = 0; k < 5; ++k)
        REQUIRE(axis_cell_center(k, 5, 0.0, 10.0) == Approx(2.0 * k + 1.0));
    REQUIRE_THROWS_AS(axis_cell_center(-1, 4, 0.0, 1.0), std::out_of_range);
    REQUIRE_THROWS_AS(axis_cell_center(4, 4, 0.0, 1.0), std::out_of_range);
    REQUIRE_THROWS_AS(axis_cell_center(0, 0, 0.0, 1.0), std::out_of_range);
}

TEST_CASE("orientation cell centers enumerate every cuboid once")
{
    GridSpec3 ones{1, 1, 1};
    EulerAngles c = orientation_cell_center(0, 0, 0, ones);
    REQUIRE(c.psi_z == 0.0);
    REQUIRE(c.psi_y == 0.0);
    REQUIRE(c.psi_x == 0.0);

    GridSpec3 twos{2, 2, 2};
    std::set<std::tuple<double, double, double>> seen;
    for (int kz = 0; kz < 2; ++kz)
        for (int ky = 0; ky < 2; ++ky)
            for (int kx = 0; kx < 2; ++kx)
            {
                EulerAngles a = orientation_cell_center(kz, ky, kx, twos);
                REQUIRE(std::abs(a.psi_z) == Approx(pi / 4));
                REQUIRE(std::abs(a.psi_y) == Approx(pi / 4));
                REQUIRE(std::abs(a.psi_x) == Approx(pi / 4));
                seen.insert({a.psi_z, a.psi_y, a.psi_x});
            }
    REQUIRE(seen.size() == 8);

    GridSpec3 mixed{3, 4, 5};
    seen.clear();
    for (int kz = 0; kz < 3; ++kz)
        for (int ky = 0; ky < 4; ++ky)
            for (int kx = 0; kx < 5; ++kx)
            {
                EulerAngles a = orientation_cell_center(kz, ky, kx, mixed);
                seen.insert({a.psi_z, a.psi_y, a.psi_x});
            }
    REQUIRE(seen.size() == 3u * 4u * 5u);
}

namespace
{

Region unit_region(double x0, double x1, double y0, double y1)
{
    Region r;
    r.x_min = x0;
    r.x_max = x1;
    r.y_min = y0;
    r.y_max = y1;
    return r;
}

} // namespace

TEST_CASE("hybrid location search converges to a smooth peak")
{
    const double ax = 3.37, ay = 7.12;
    auto score = [&](double x, double y) {
        return 1.0 / (1.0 + (x - ax) * (x - ax) + (y - ay) * (y - ay));
    };
    Region region = unit_region(0.0, 10.0, 0.0, 10.0);
    LocationSearchOptions opt;
    opt.coarse = {10, 10};
    opt.fine = {10, 10};

    LocationOutcome out = search_location(region, score, 0.0, 0.0, 0.0, opt);
    REQUIRE(out.feasible);
    REQUIRE(std::abs(out.x - ax) <= 0.05 + 1e-12);
    REQUIRE(std::abs(out.y - ay) <= 0.05 + 1e-12);

    // The refinement may never lose to the best coarse center.
    double coarse_best = 0.0;
    for (int iy = 0; iy < opt.coarse.ny; ++iy)
        for (int ix = 0; ix < opt.coarse.nx; ++ix)
            coarse_best = std::max(
                coarse_best, score(axis_cell_center(ix, opt.coarse.nx, 0.0, 10.0),
                                   axis_cell_center(iy, opt.coarse.ny, 0.0, 10.0)));
    REQUIRE(out.score >= coarse_best);
}

TEST_CASE("even fine grids keep the winning coarse center as a candidate")
{
    Region region = unit_region(0.0, 10.0, 0.0, 10.0);
    // Peak exactly at the center of coarse cell (2, 2) in a 5x5 tiling.
    const double cx = axis_cell_center(2, 5, 0.0, 10.0);
    const double cy = axis_cell_center(2, 5, 0.0, 10.0);
    auto score = [&](double x, double y) {
        return 1.0 / (1.0 + (x - cx) * (x - cx) + (y - cy) * (y - cy));
    };
    LocationSearchOptions opt;
    opt.coarse = {5, 5};
    opt.fine = {2, 2}; // sub-centers all miss the peak
    LocationOutcome out = search_location(region, score, 0.0, 0.0, 0.0, opt);
    REQUIRE(out.feasible);
    REQUIRE(out.x == cx);
    REQUIRE(out.y == cy);
    REQUIRE(out.score == 1.0);
}

TEST_CASE("infeasible grids fall back to the incumbent")
{
    Region region = unit_region(0.0, 10.0, 0.0, 10.0);
    LocationSearchOptions opt;
    opt.coarse = {4, 4};
    opt.fine = {3, 3};
    auto zero = [](double, double) { return 0.0; };
    LocationOutcome out = search_location(region, zero, 1.25, 2.5, 0.75, opt);
    REQUIRE_FALSE(out.feasible);
    REQUIRE(out.x == 1.25);
    REQUIRE(out.y == 2.5);
    REQUIRE(out.score == 0.75);

    auto zero3 = [](const EulerAngles &) { return 0.0; };
    EulerAngles inc{0.1, -0.2, 0.3};
    OrientationSearchOptions oopt;
    oopt.coarse = {4, 4, 4};
    oopt.fine = {2, 2, 2};
    OrientationOutcome oout = search_orientation(zero3, inc, 0.5, oopt);
    REQUIRE_FALSE(oout.feasible);
    REQUIRE(oout.angles.psi_z == 0.1);
    REQUIRE(oout.angles.psi_y == -0.2);
    REQUIRE(oout.angles.psi_x == 0.3);
    REQUIRE(oout.score == 0.5);
}

TEST_CASE("ties resolve to the lowest linear index")
{
    Region region = unit_region(0.0, 8.0, 0.0, 4.0);
    LocationSearchOptions opt;
    opt.coarse = {4, 2};
    opt.fine = {2, 2};
    auto flat = [](double, double) { return 1.0; };
    LocationOutcome out = search_location(region, flat, 0.0, 0.0, 0.0, opt);
    REQUIRE(out.feasible);

    // Mirror the implementation arithmetic for the first fine candidate of
    // coarse cell (0, 0).
    const double cw = region.width() / opt.coarse.nx;
    const double ch = region.height() / opt.coarse.ny;
    const double wx = axis_cell_center(0, opt.coarse.nx, region.x_min, region.x_max);
    const double wy = axis_cell_center(0, opt.coarse.ny, region.y_min, region.y_max);
    const double lox = wx - 0.5 * cw;
    const double loy = wy - 0.5 * ch;
    REQUIRE(out.x == axis_cell_center(0, opt.fine.nx, lox, lox + cw));
    REQUIRE(out.y == axis_cell_center(0, opt.fine.ny, loy, loy + ch));
}

TEST_CASE("results are identical for every thread count")
{
    auto rugged = [](double x, double y) {
        return 2.0 + std::sin(13.7 * x) * std::cos(7.3 * y) +
               0.3 * std::sin(29.0 * x + 1.0);
    };
    Region region = unit_region(-3.0, 5.0, 0.0, 9.0);
    LocationSearchOptions opt;
    opt.coarse = {37, 23};
    opt.fine = {11, 13};

    set_thread_count(1);
    LocationOutcome ref = search_location(region, rugged, 0.0, 0.0, 0.0, opt);
    for (int workers : {2, 3, 4, 8})
    {
        set_thread_count(workers);
        LocationOutcome out = search_location(region, rugged, 0.0, 0.0, 0.0, opt);
        REQUIRE(out.x == ref.x);
        REQUIRE(out.y == ref.y);
        REQUIRE(out.score == ref.score);
    }
    set_thread_count(1);
}

TEST_CASE("orientation stage recovers the known single user optimum")
{
    SingleUserCase c = SingleUserCase::standard(500.0, 100.0, SystemParams{});
    Scenario sc = c.to_scenario();
    const double qx = 150.0;
    const double pitch = optimal_pitch(qx, c);

    // Phase profile matched to the closed-form optimal orientation: both the
    // aperture factor and the beamforming gain then peak at that orientation,
    // so the grid search must land on it.
    Pose target{Vec3(qx, 0.0, c.altitude), EulerAngles{0.0, pitch, 0.0}};
    PhaseProfile theta = inphase_profile(link_angles(sc, target), 0, sc.params);

    Pose flat{Vec3(qx, 0.0, c.altitude), EulerAngles{0.0, 0.0, 0.0}};
    OrientationOutcome out =
        optimize_orientation(sc, flat, theta, OrientationSearchOptions{});
    REQUIRE(out.feasible);

    // Euler angles are gauge-degenerate (rotating the surface about its own
    // normal barely changes the objective), so compare normals, not angles.
    DirectionCosines nf = surface_normal(out.angles);
    DirectionCosines nt = surface_normal(target.angles);
    const double align = nf.l1 * nt.l1 + nf.l2 * nt.l2 + nf.l3 * nt.l3;
    REQUIRE(align >= std::cos(pi / 180));

    const double bound = snr_pitch_optimal(qx, c);
    REQUIRE(out.score >= 0.98 * bound);
    REQUIRE(out.score <= bound * (1.0 + 1e-9));
}

TEST_CASE("location stage recovers the path loss optimum")
{
    // Pure two-hop path loss objective: the exact maximizer is the smaller
    // root of the single user isotropic placement problem. The region is
    // truncated on the right so only one root is inside.
    const double d = 500.0, h = 100.0;
    const double root = d / 2.0 - std::sqrt(d * d / 4.0 - h * h);
    auto score = [&](double x, double y) {
        const double r1sq = x * x + y * y + h * h;
        const double dx = x - d;
        const double r2sq = dx * dx + y * y + h * h;
        return 1.0 / (r1sq * r2sq);
    };
    Region region = unit_region(-140.0, 300.0, -58.0, 298.0);
    LocationSearchOptions opt; // 100x100 coarse and fine
    LocationOutcome out = search_location(region, score, 0.0, 0.0, 0.0, opt);
    REQUIRE(out.feasible);
    REQUIRE(std::abs(out.x - root) <= 0.05);
    REQUIRE(std::abs(out.y) <= 0.05);
}
