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

#include "search.hpp"

#include <stdexcept>

#include "threads.hpp"

namespace a6d
{

void GridSpec2::validate() const
{
    if (nx < 1 || ny < 1)
        throw std::invalid_argument("GridSpec2: cell counts must be >= 1");
}

void GridSpec3::validate() const
{
    if (nz < 1 || ny < 1 || nx < 1)
        throw std::invalid_argument("GridSpec3: cell counts must be >= 1");
}

double axis_cell_center(int k, int n, double lo, double hi)
{
    if (n < 1)
        throw std::out_of_range("axis_cell_center: cell count must be >= 1");
    if (k < 0 || k >= n)
        throw std::out_of_range("axis_cell_center: cell index out of range");
    const double width = (hi - lo) / static_cast<double>(n);
    return lo + (static_cast<double>(k) + 0.5) * width;
}

EulerAngles orientation_cell_center(int kz, int ky, int kx, const GridSpec3 &spec)
{
    spec.validate();
    constexpr double lo = -pi / 2.0;
    constexpr double hi = pi / 2.0;
    return EulerAngles{axis_cell_center(kz, spec.nz, lo, hi),
                       axis_cell_center(ky, spec.ny, lo, hi),
                       axis_cell_center(kx, spec.nx, lo, hi)};
}

LocationOutcome search_location(const Region &region,
                                const std::function<double(double, double)> &score,
                                double incumbent_x, double incumbent_y,
                                double incumbent_score,
                                const LocationSearchOptions &opt)
{
    opt.coarse.validate();
    opt.fine.validate();
    region.validate();

    const double cw = region.width() / opt.coarse.nx;
    const double ch = region.height() / opt.coarse.ny;

    auto coarse_point = [&](std::size_t idx, double *x, double *y) {
        const int iy = static_cast<int>(idx) / opt.coarse.nx;
        const int ix = static_cast<int>(idx) % opt.coarse.nx;
        *x = axis_cell_center(ix, opt.coarse.nx, region.x_min, region.x_max);
        *y = axis_cell_center(iy, opt.coarse.ny, region.y_min, region.y_max);
    };

    const std::size_t coarse_count =
        static_cast<std::size_t>(opt.coarse.nx) * opt.coarse.ny;
    double coarse_best = 0.0;
    const std::size_t winner = argmax_index(
        coarse_count,
        [&](std::size_t idx) {
            double x, y;
            coarse_point(idx, &x, &y);
            return score(x, y);
        },
        &coarse_best);

    double wx, wy;
    coarse_point(winner, &wx, &wy);
    const double cell_x_lo = wx - 0.5 * cw;
    const double cell_y_lo = wy - 0.5 * ch;

    // Fine candidates sub-tile the winning cell; the winning center itself is
    // appended last so the refinement can never lose to the coarse stage.
    const std::size_t fine_count =
        static_cast<std::size_t>(opt.fine.nx) * opt.fine.ny;
    auto fine_point = [&](std::size_t idx, double *x, double *y) {
        if (idx == fine_count)
        {
            *x = wx;
            *y = wy;
            return;
        }
        const int iy = static_cast<int>(idx) / opt.fine.nx;
        const int ix = static_cast<int>(idx) % opt.fine.nx;
        *x = axis_cell_center(ix, opt.fine.nx, cell_x_lo, cell_x_lo + cw);
        *y = axis_cell_center(iy, opt.fine.ny, cell_y_lo, cell_y_lo + ch);
    };

    double fine_best = 0.0;
    const std::size_t pick = argmax_index(
        fine_count + 1,
        [&](std::size_t idx) {
            double x, y;
            fine_point(idx, &x, &y);
            return score(x, y);
        },
        &fine_best);

    LocationOutcome out;
    if (fine_best > 0.0)
    {
        fine_point(pick, &out.x, &out.y);
        out.score = fine_best;
        out.feasible = true;
    }
    else
    {
        out.x = incumbent_x;
        out.y = incumbent_y;
        out.score = incumbent_score;
        out.feasible = false;
    }
    return out;
}

OrientationOutcome
search_orientation(const std::function<double(const EulerAngles &)> &score,
                   const EulerAngles &incumbent, double incumbent_score,
                   const OrientationSearchOptions &opt)
{
    opt.coarse.validate();
    opt.fine.validate();

    constexpr double lo = -pi / 2.0;
    constexpr double hi = pi / 2.0;

    auto decode3 = [](std::size_t idx, const GridSpec3 &g, int *kz, int *ky, int *kx) {
        *kx = static_cast<int>(idx % g.nx);
        *ky = static_cast<int>((idx / g.nx) % g.ny);
        *kz = static_cast<int>(idx / (static_cast<std::size_t>(g.nx) * g.ny));
    };

    const std::size_t coarse_count = static_cast<std::size_t>(opt.coarse.nz) *
                                     opt.coarse.ny * opt.coarse.nx;
    double coarse_best = 0.0;
    const std::size_t winner = argmax_index(
        coarse_count,
        [&](std::size_t idx) {
            int kz, ky, kx;
            decode3(idx, opt.coarse, &kz, &ky, &kx);
            return score(orientation_cell_center(kz, ky, kx, opt.coarse));
        },
        &coarse_best);

    int wz, wyk, wxk;
    decode3(winner, opt.coarse, &wz, &wyk, &wxk);
    const EulerAngles wc = orientation_cell_center(wz, wyk, wxk, opt.coarse);
    const double hz = 0.5 * (hi - lo) / opt.coarse.nz;
    const double hy = 0.5 * (hi - lo) / opt.coarse.ny;
    const double hx = 0.5 * (hi - lo) / opt.coarse.nx;

    const std::size_t fine_count =
        static_cast<std::size_t>(opt.fine.nz) * opt.fine.ny * opt.fine.nx;
    auto fine_angles = [&](std::size_t idx) {
        if (idx == fine_count)
            return wc;
        int kz, ky, kx;
        decode3(idx, opt.fine, &kz, &ky, &kx);
        return EulerAngles{
            axis_cell_center(kz, opt.fine.nz, wc.psi_z - hz, wc.psi_z + hz),
            axis_cell_center(ky, opt.fine.ny, wc.psi_y - hy, wc.psi_y + hy),
            axis_cell_center(kx, opt.fine.nx, wc.psi_x - hx, wc.psi_x + hx)};
    };

    double fine_best = 0.0;
    const std::size_t pick = argmax_index(
        fine_count + 1,
        [&](std::size_t idx) { return score(fine_angles(idx)); }, &fine_best);

    OrientationOutcome out;
    if (fine_best > 0.0)
    {
        out.angles = fine_angles(pick);
        out.score = fine_best;
        out.feasible = true;
    }
    else
    {
        out.angles = incumbent;
        out.score = incumbent_score;
        out.feasible = false;
    }
    return out;
}

LocationOutcome optimize_location(const Scenario &sc, const Pose &pose,
                                  const PhaseProfile &profile,
                                  const LocationSearchOptions &opt)
{
    const double incumbent = min_snr(sc, pose, profile);
    auto value = [&](double x, double y) {
        Pose candidate{Vec3(x, y, sc.altitude), pose.angles};
        return min_snr(sc, candidate, profile);
    };
    return search_location(sc.region, value, pose.position.x(), pose.position.y(),
                           incumbent, opt);
}

OrientationOutcome optimize_orientation(const Scenario &sc, const Pose &pose,
                                        const PhaseProfile &profile,
                                        const OrientationSearchOptions &opt)
{
    const double incumbent = min_snr(sc, pose, profile);
    auto value = [&](const EulerAngles &angles) {
        Pose candidate{pose.position, angles};
        return min_snr(sc, candidate, profile);
    };
    return search_orientation(value, pose.angles, incumbent, opt);
}

} // namespace a6d
