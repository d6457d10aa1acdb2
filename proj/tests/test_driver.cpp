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

#include "driver.hpp"
#include "errors.hpp"
#include "single_user.hpp"

using namespace a6d;
using Catch::Approx;

namespace
{

Scenario sparse_scenario()
{
    Scenario sc;
    sc.users = {Vec3(330.0, 240.0, 0.0), Vec3(650.0, 130.0, 0.0),
                Vec3(440.0, 15.0, 0.0)};
    return sc;
}

// Small search/exploration budget so unit runs stay fast.
DriverOptions small_options()
{
    DriverOptions opt;
    opt.ao_iterations = 1;
    opt.location.coarse = {24, 12};
    opt.location.fine = {5, 5};
    opt.orientation.coarse = {10, 10, 10};
    opt.orientation.fine = {3, 3, 3};
    opt.gs.iterations = 15;
    opt.gs.candidates = 12;
    opt.sca.objective_tol = 1e-3;
    opt.sca.sdp.gap_tol = 1e-7;
    return opt;
}

void require_nondecreasing(const Solution &sol)
{
    for (std::size_t i = 1; i < sol.trace.size(); ++i)
        REQUIRE(sol.trace[i].snr >= sol.trace[i - 1].snr);
}

double normal_alignment(const EulerAngles &a, const EulerAngles &b)
{
    const DirectionCosines na = surface_normal(a);
    const DirectionCosines nb = surface_normal(b);
    return na.l1 * nb.l1 + na.l2 * nb.l2 + na.l3 * nb.l3;
}

} // namespace

TEST_CASE("scheme tokens round-trip and reject unknown names")
{
    for (Scheme s : all_schemes())
        REQUIRE(parse_scheme(scheme_token(s)) == s);
    REQUIRE(parse_scheme("ao_with_gs") == Scheme::ao_with_gs);
    REQUIRE_THROWS_AS(parse_scheme("annealing"), ConfigError);
    REQUIRE(scheme_is_single_user(Scheme::joint));
    REQUIRE(scheme_is_single_user(Scheme::location_only));
    REQUIRE_FALSE(scheme_is_single_user(Scheme::ao_with_gs));
    REQUIRE_FALSE(scheme_is_single_user(Scheme::isotropic_bound));
}

TEST_CASE("driver options are validated")
{
    DriverOptions opt = small_options();
    REQUIRE_NOTHROW(opt.validate());
    opt.ao_iterations = 0;
    REQUIRE_THROWS_AS(opt.validate(), ConfigError);
    opt = small_options();
    opt.gs.candidates = 5;
    REQUIRE_THROWS_AS(opt.validate(), ConfigError);
}

TEST_CASE("initial location maximizes the worst-user path gain")
{
    // Single user: the path-gain argmax is an isotropic-optimal root.
    SingleUserCase c = SingleUserCase::standard(500.0, 100.0, SystemParams{});
    Scenario sc = c.to_scenario();
    LocationSearchOptions lopt;
    lopt.coarse = {100, 1};
    lopt.fine = {100, 1};
    const Vec3 q = init_location(sc, lopt);
    REQUIRE(q.z() == sc.altitude);
    REQUIRE(q.y() == 0.0);
    const auto roots = iso_optimal_qx(500.0, 100.0);
    const double err = std::min(std::abs(q.x() - roots.front()),
                                std::abs(q.x() - roots.back()));
    REQUIRE(err <= 0.05);

    // Two users mirrored about y = 0 with a y-symmetric region: the worst-user
    // path gain is symmetric in y, so the argmax sits next to the y = 0 plane.
    Scenario two;
    two.users = {Vec3(400.0, 150.0, 0.0), Vec3(400.0, -150.0, 0.0)};
    two.region = {-150.0, 650.0, -200.0, 200.0};
    LocationSearchOptions sym;
    sym.coarse = {50, 50};
    sym.fine = {20, 20};
    const Vec3 p = init_location(two, sym);
    REQUIRE(std::abs(p.y()) <= 0.5);
}

TEST_CASE("initial orientation maximizes the worst-user aperture gain")
{
    SingleUserCase c = SingleUserCase::standard(500.0, 100.0, SystemParams{});
    Scenario sc = c.to_scenario();
    const double qx = 150.0;
    const Vec3 q(qx, 0.0, c.altitude);
    OrientationSearchOptions oopt; // full default grids

    const EulerAngles found = init_orientation(sc, q, oopt);
    const EulerAngles target{0.0, optimal_pitch(qx, c), 0.0};
    // Angles are gauge-degenerate; the surface normal is the physical quantity.
    REQUIRE(normal_alignment(found, target) >= std::cos(pi / 180));
    const double best = effective_aperture_gain(sc, Pose{q, target}, 0);
    REQUIRE(effective_aperture_gain(sc, Pose{q, found}, 0) >= 0.995 * best);

    Scenario iso = sc;
    iso.isotropic = true;
    const EulerAngles zero = init_orientation(iso, q, oopt);
    REQUIRE(zero.psi_z == 0.0);
    REQUIRE(zero.psi_y == 0.0);
    REQUIRE(zero.psi_x == 0.0);
}

TEST_CASE("initial phases recover the matched single-user gain")
{
    SingleUserCase c = SingleUserCase::standard(500.0, 100.0, SystemParams{});
    Scenario sc = c.to_scenario();
    const Pose pose{Vec3(250.0, 0.0, c.altitude), EulerAngles{}};
    ScaOptions opt;
    const PhaseProfile theta = init_phases(sc, pose, opt);

    for (int i = 0; i < theta.x.size(); ++i)
        REQUIRE(std::abs(std::abs(theta.x[i]) - 1.0) <= 1e-12);
    for (int i = 0; i < theta.y.size(); ++i)
        REQUIRE(std::abs(std::abs(theta.y[i]) - 1.0) <= 1e-12);

    const double m = double(sc.params.element_count());
    const AxisResponse f = composite_response(link_angles(sc, pose), 0, sc.params);
    REQUIRE(beamforming_gain(f, theta) >= 0.99 * m * m);

    const PhaseProfile again = init_phases(sc, pose, opt);
    for (int i = 0; i < theta.x.size(); ++i)
        REQUIRE(theta.x[i] == again.x[i]);
}

TEST_CASE("single-user schemes reproduce the closed forms")
{
    SingleUserCase c = SingleUserCase::standard(500.0, 100.0, SystemParams{});
    Scenario sc = c.to_scenario();
    DriverOptions opt = small_options();

    const Solution joint = run_scheme(sc, Scheme::joint, opt);
    const Solution ori = run_scheme(sc, Scheme::orientation_only, opt);
    const Solution loc = run_scheme(sc, Scheme::location_only, opt);
    const Solution iso = run_scheme(sc, Scheme::isotropic_bound, opt);

    const JointResult jr = solve_joint(c);
    REQUIRE(joint.snr == jr.snr);
    REQUIRE(joint.pose.position.x() == jr.qx);
    REQUIRE(joint.pose.angles.psi_y == jr.psi_y);
    REQUIRE(joint.scheme == Scheme::joint);
    REQUIRE(joint.trace.size() == 1);

    REQUIRE(ori.snr == orientation_only(c).snr);
    REQUIRE(loc.snr == location_only(c).snr);
    REQUIRE(loc.pose.angles.psi_y == 0.0);
    REQUIRE(iso.snr == isotropic_bound(c).snr);

    // Containment ordering of the underlying feasible sets.
    REQUIRE(iso.snr >= joint.snr * (1.0 - 1e-12));
    REQUIRE(joint.snr >= ori.snr * (1.0 - 1e-12));
    REQUIRE(ori.snr >= loc.snr * (1.0 - 1e-12));

    // Dispatch guards: single-user schemes reject multi-user scenarios.
    const Scenario multi = sparse_scenario();
    REQUIRE_THROWS_AS(run_scheme(multi, Scheme::joint, opt), SchemeError);
    REQUIRE_THROWS_AS(run_scheme(multi, Scheme::orientation_only, opt), SchemeError);
    REQUIRE_THROWS_AS(run_scheme(multi, Scheme::location_only, opt), SchemeError);
    Scenario off = sc;
    off.users[0].y() = 40.0;
    REQUIRE_THROWS_AS(run_scheme(off, Scheme::joint, opt), SchemeError);
}

TEST_CASE("guarded single-user loop lands between the two closed forms")
{
    SingleUserCase c = SingleUserCase::standard(500.0, 100.0, SystemParams{});
    Scenario sc = c.to_scenario();
    DriverOptions opt = small_options();
    opt.location.coarse = {40, 1};
    opt.location.fine = {25, 1};
    opt.orientation.coarse = {12, 12, 12};

    const Solution sol = ao_run(sc, opt, false, true, false);
    require_nondecreasing(sol);
    // The loop starts in the isotropic-root basin and must keep at least the
    // pinned-location optimum; the joint closed form bounds it from above.
    REQUIRE(sol.snr >= orientation_only(c).snr * (1.0 - 3e-3));
    REQUIRE(sol.snr <= solve_joint(c).snr * (1.0 + 1e-9));
    REQUIRE(sol.trace.size() == 4); // init + location/orientation/phases
}

TEST_CASE("exploration extends a guarded run without ever losing SNR")
{
    const Scenario sc = sparse_scenario();
    DriverOptions opt = small_options();
    opt.seed = 7;

    const Solution plain = ao_run(sc, opt, false, true, false);
    const Solution explored = ao_run(sc, opt, true, true, false);

    // Identical stages up to the exploration tail, which can only add SNR.
    REQUIRE(plain.trace.size() == 4);
    REQUIRE(explored.trace.size() == 5);
    for (std::size_t i = 0; i < plain.trace.size(); ++i)
        REQUIRE(explored.trace[i].snr == plain.trace[i].snr);
    REQUIRE(explored.snr >= plain.snr);
    require_nondecreasing(explored);
    REQUIRE(explored.snr > 0.0);
}

TEST_CASE("plain loop keeps a monotone trace and reports its final state")
{
    SingleUserCase c = SingleUserCase::standard(500.0, 100.0, SystemParams{});
    Scenario sc = c.to_scenario();
    DriverOptions opt = small_options();

    const Solution sol = run_scheme(sc, Scheme::ao_no_gs, opt);
    REQUIRE(sol.scheme == Scheme::ao_no_gs);
    REQUIRE(sol.trace.size() == 4);
    REQUIRE(sol.snr == sol.trace.back().snr);
    REQUIRE(sol.snr > 0.0);
    require_nondecreasing(sol);
}

TEST_CASE("orientation lock keeps the reference angles throughout")
{
    SingleUserCase c = SingleUserCase::standard(500.0, 100.0, SystemParams{});
    Scenario sc = c.to_scenario();
    DriverOptions opt = small_options();

    const Solution sol = run_scheme(sc, Scheme::no_orientation, opt);
    REQUIRE(sol.scheme == Scheme::no_orientation);
    REQUIRE(sol.pose.angles.psi_z == 0.0);
    REQUIRE(sol.pose.angles.psi_y == 0.0);
    REQUIRE(sol.pose.angles.psi_x == 0.0);
    REQUIRE(sol.trace.size() == 3); // init + location + phases
    require_nondecreasing(sol);
}

TEST_CASE("individual optimization is the one-shot initialization triple")
{
    SingleUserCase c = SingleUserCase::standard(500.0, 100.0, SystemParams{});
    Scenario sc = c.to_scenario();
    DriverOptions opt = small_options();

    const Solution sol = run_scheme(sc, Scheme::individual_optimization, opt);
    REQUIRE(sol.scheme == Scheme::individual_optimization);
    REQUIRE(sol.trace.size() == 1);
    REQUIRE(sol.snr == min_snr(sc, sol.pose, sol.phases));
    REQUIRE(sol.snr > 0.0);
    REQUIRE(sol.runtime_ms >= 0.0);
}
