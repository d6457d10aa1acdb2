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
#include <random>

#include "channel.hpp"
#include "geometry.hpp"

using namespace a6d;

namespace
{

std::mt19937_64 rng(777);

Scenario standard_single()
{
    Scenario sc;
    sc.users = {Vec3(500.0, 0.0, 0.0)};
    sc.altitude = 100.0;
    sc.region = {-100.0, 600.0, 0.0, 0.0};
    return sc;
}

Pose flat_pose(double qx, double qy = 0.0, double h = 100.0)
{
    Pose p;
    p.position = Vec3(qx, qy, h);
    return p;
}

CVec random_unit_modulus(int n)
{
    std::uniform_real_distribution<double> u(-pi, pi);
    CVec v(n);
    for (int i = 0; i < n; ++i)
        v[i] = std::polar(1.0, u(rng));
    return v;
}

} // namespace

TEST_CASE("BS steering vector")
{
    SystemParams p;
    p.bs_antennas = 4;

    // Broadside: all-ones response.
    const CVec broadside = bs_steering(0.0, p);
    REQUIRE(broadside.size() == 4);
    for (int m = 0; m < 4; ++m)
        CHECK(std::abs(broadside[m] - Cplx(1.0, 0.0)) < 1e-14);

    // End-fire with half-wavelength spacing: alternating signs.
    const CVec endfire = bs_steering(1.0, p);
    for (int m = 0; m < 4; ++m)
        CHECK(std::abs(endfire[m] - Cplx(m % 2 == 0 ? 1.0 : -1.0, 0.0)) < 1e-12);

    // Squared norm equals the antenna count for any direction.
    const CVec a = bs_steering(0.37, p);
    CHECK(a.squaredNorm() == Catch::Approx(4.0).epsilon(1e-12));

    CHECK_THROWS_AS(bs_steering(1.5, p), std::invalid_argument);
}

TEST_CASE("surface steering matches the flat-index phase law")
{
    SystemParams p;
    p.elements_x = 5;
    p.elements_y = 3;

    LinkAngles::Side side;
    side.elevation = 0.9;
    side.azimuth = -2.1;
    side.distance = 123.0;

    const AxisResponse r = surface_rx_steering(side, p);
    REQUIRE(r.x.size() == 5);
    REQUIRE(r.y.size() == 3);

    // Direct per-element evaluation as the oracle.
    const double k = 2.0 * pi * p.element_spacing / p.wavelength;
    const double ux = std::sin(side.elevation) * std::cos(side.azimuth);
    const double uy = std::sin(side.elevation) * std::sin(side.azimuth);
    const CVec full = kron_xy(r.x, r.y);
    for (int ix = 0; ix < 5; ++ix)
        for (int iy = 0; iy < 3; ++iy)
        {
            const Cplx expected = std::polar(1.0, -k * (ix * ux + iy * uy));
            CHECK(std::abs(full[ix * 3 + iy] - expected) < 1e-9);
        }

    // Boresight arrival: all phases vanish.
    side.elevation = 0.0;
    const AxisResponse b = surface_rx_steering(side, p);
    CHECK((b.x - CVec::Ones(5)).norm() < 1e-14);
    CHECK((b.y - CVec::Ones(3)).norm() < 1e-14);
}

TEST_CASE("composite response structure")
{
    const Scenario sc = standard_single();
    Pose pose = flat_pose(180.0, 40.0);
    pose.angles = {0.2, -0.4, 0.3};

    const LinkAngles la = link_angles(sc, pose);
    const AxisResponse f = composite_response(la, 0, sc.params);

    REQUIRE(f.x.size() == sc.params.elements_x);
    REQUIRE(f.y.size() == sc.params.elements_y);
    CHECK(std::abs(f.x[0] - Cplx(1.0, 0.0)) < 1e-12);
    CHECK(std::abs(f.y[0] - Cplx(1.0, 0.0)) < 1e-12);

    // Unit modulus and geometric progression with a constant ratio.
    const Cplx ratio_x = f.x[1] * std::conj(f.x[0]);
    const Cplx ratio_y = f.y[1] * std::conj(f.y[0]);
    for (int n = 0; n < f.x.size(); ++n)
        CHECK(std::abs(std::abs(f.x[n]) - 1.0) < 1e-12);
    for (int n = 0; n + 1 < f.x.size(); ++n)
        CHECK(std::abs(f.x[n + 1] - ratio_x * f.x[n]) < 1e-9);
    for (int n = 0; n + 1 < f.y.size(); ++n)
        CHECK(std::abs(f.y[n + 1] - ratio_y * f.y[n]) < 1e-9);
}

TEST_CASE("beamforming gain bounds and alignment")
{
    const Scenario sc = standard_single();
    Pose pose = flat_pose(250.0);
    const LinkAngles la = link_angles(sc, pose);
    const AxisResponse f = composite_response(la, 0, sc.params);
    const double n2 = 256.0 * 256.0;

    // Aligned profile reaches the square of the element count.
    const PhaseProfile aligned = inphase_profile(la, 0, sc.params);
    CHECK(beamforming_gain(f, aligned) == Catch::Approx(n2).epsilon(1e-9));

    // The peak gain in decibels: 10 log10(256^2) = 48.16, reported as 48.2.
    CHECK(std::abs(linear_to_db(beamforming_gain(f, aligned)) - 48.2) < 0.05);

    // No unit-modulus profile exceeds the bound.
    for (int i = 0; i < 500; ++i)
    {
        const PhaseProfile t{random_unit_modulus(16), random_unit_modulus(16)};
        const double g = beamforming_gain(f, t);
        CHECK(g >= 0.0);
        CHECK(g <= n2 * (1.0 + 1e-12));
    }
}

TEST_CASE("single-user SNR closed-form value")
{
    // Literal evaluation of the pitch-only formula as an oracle:
    // C = Pbar * beta0^2 * M * N^2, gamma = C * H^2 / (r1^2 r2^2 * r1 r2) with
    // psi_y = 0, qx = 250, D = 500, H = 100 -> about 11.0 linear (10.4 dB).
    const double pbar = 0.1 / 1e-14;
    const double c = pbar * 1e-4 * 1e-4 * 64.0 * 256.0 * 256.0;
    const double r1sq = 250.0 * 250.0 + 100.0 * 100.0;
    const double r2sq = r1sq;
    const double f = (100.0 / std::sqrt(r1sq)) * (100.0 / std::sqrt(r2sq));
    const double expected = c * f / (r1sq * r2sq);
    REQUIRE(expected == Catch::Approx(11.0064).epsilon(1e-4));

    const Scenario sc = standard_single();
    const Pose pose = flat_pose(250.0);
    const LinkAngles la = link_angles(sc, pose);
    const PhaseProfile t = inphase_profile(la, 0, sc.params);
    const SnrTerms s = user_snr(sc, pose, t, 0);

    CHECK(s.feasible);
    CHECK(s.snr == Catch::Approx(expected).epsilon(1e-9));
    CHECK(s.snr_db() == Catch::Approx(10.4164).margin(0.05));

    // Decomposition fields against independent arithmetic.
    CHECK(s.bs_path == Catch::Approx(1e-4 / r1sq).epsilon(1e-12));
    CHECK(s.user_path == Catch::Approx(1e-4 / r2sq).epsilon(1e-12));
    CHECK(s.aperture == Catch::Approx(f).epsilon(1e-12));
    CHECK(s.bf_gain == Catch::Approx(256.0 * 256.0).epsilon(1e-9));

    // Multiplicative reconstruction.
    const double rebuilt =
        pbar * 64.0 * s.bs_path * s.user_path * s.aperture * s.bf_gain;
    CHECK(s.snr == Catch::Approx(rebuilt).epsilon(1e-9));
}

TEST_CASE("min SNR over users")
{
    Scenario sc = standard_single();
    sc.users = {Vec3(500.0, 0.0, 0.0), Vec3(-50.0, 120.0, 0.0)};

    const Pose pose = flat_pose(220.0, 30.0);
    const LinkAngles la = link_angles(sc, pose);
    const PhaseProfile t = inphase_profile(la, 0, sc.params);

    const double m = min_snr(sc, pose, t);
    const double a = user_snr(sc, pose, t, 0).snr;
    const double b = user_snr(sc, pose, t, 1).snr;
    CHECK(m == std::min(a, b));

    // An orientation that loses one user zeroes the minimum.
    Pose tilted = pose;
    tilted.angles = {0.0, pi / 2.0, 0.0}; // normal along +x: user at -x side unserved
    CHECK(min_snr(sc, tilted, t) == 0.0);
}

TEST_CASE("isotropic mode ignores orientation")
{
    Scenario sc = standard_single();
    sc.isotropic = true;

    const PhaseProfile t{random_unit_modulus(16), random_unit_modulus(16)};
    Pose a = flat_pose(130.0, 20.0);
    Pose b = a;
    a.angles = {0.5, -0.3, 0.2};
    b.angles = {-1.1, 0.9, -0.7};

    // Identical SNR for any orientation at the same position and profile.
    CHECK(user_snr(sc, a, t, 0).snr == user_snr(sc, b, t, 0).snr);
    CHECK(user_snr(sc, a, t, 0).aperture == 1.0);

    // Upper bound property versus the oriented model at the same position.
    Scenario oriented = sc;
    oriented.isotropic = false;
    const LinkAngles la = link_angles(sc, flat_pose(130.0, 20.0));
    const PhaseProfile aligned = inphase_profile(la, 0, sc.params);
    CHECK(user_snr(sc, flat_pose(130.0, 20.0), aligned, 0).snr >=
          user_snr(oriented, flat_pose(130.0, 20.0), aligned, 0).snr);
}

TEST_CASE("explicit channel factors reproduce the SNR")
{
    const Scenario sc = standard_single();
    std::uniform_real_distribution<double> uq(-80.0, 580.0);
    std::uniform_real_distribution<double> ua(-0.6, 0.6);

    for (int trial = 0; trial < 20; ++trial)
    {
        Pose pose = flat_pose(uq(rng), uq(rng) / 8.0);
        pose.angles = {ua(rng), ua(rng), ua(rng)};
        if (!reflection_feasible(sc, pose))
            continue;

        const LinkAngles la = link_angles(sc, pose);
        const PhaseProfile t{random_unit_modulus(16), random_unit_modulus(16)};

        // Assemble the SNR from the explicit matrices, absolute phases included:
        // gamma = Pbar * F * | h^H diag(theta) H v |^2 with the matched filter v.
        const CMat h_bs = bs_surface_channel(sc, pose);
        const CVec h_user = surface_user_channel(sc, pose, 0);
        CVec v = bs_steering(la.bs_axis_cos, sc.params);
        v /= v.norm();
        const CVec theta = kron_xy(t.x, t.y);
        const Cplx amp = h_user.dot(theta.asDiagonal() * (h_bs * v)); // dot() conjugates h_user
        const double f_ag = effective_aperture_gain(sc, pose, 0);
        const double gamma = sc.params.snr_scale() * f_ag * std::norm(amp);

        const double direct = user_snr(sc, pose, t, 0).snr;
        CHECK(gamma == Catch::Approx(direct).epsilon(1e-9));
    }
}
