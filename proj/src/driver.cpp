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

#include "driver.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <utility>

#include "errors.hpp"
#include "single_user.hpp"

namespace a6d
{

namespace
{

struct SchemeName
{
    Scheme scheme;
    std::string_view token;
};

constexpr SchemeName k_schemes[] = {
    {Scheme::joint, "joint"},
    {Scheme::orientation_only, "orientation_only"},
    {Scheme::location_only, "location_only"},
    {Scheme::isotropic_bound, "isotropic_bound"},
    {Scheme::ao_with_gs, "ao_with_gs"},
    {Scheme::ao_no_gs, "ao_no_gs"},
    {Scheme::individual_optimization, "individual_optimization"},
    {Scheme::no_orientation, "no_orientation"},
};

double to_db(double snr)
{
    if (!(snr > 0.0))
        return -std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(snr);
}

class Stopwatch
{
  public:
    double ms() const
    {
        const auto now = std::chrono::steady_clock::now();
        return std::chrono::duration<double, std::milli>(now - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_ =
        std::chrono::steady_clock::now();
};

// Reduced problem behind the single-user closed forms; the placement interval
// is taken from the scenario's region.
SingleUserCase single_case(const Scenario &sc)
{
    if (sc.users.size() != 1)
        throw SchemeError("single-user schemes require exactly one user");
    if (sc.bs.x() != 0.0 || sc.bs.y() != 0.0)
        throw SchemeError("single-user schemes assume the base station at the origin");
    const Vec3 &w = sc.users.front();
    if (w.y() != 0.0)
        throw SchemeError("single-user schemes require the user on the x axis");
    if (!(w.x() > 0.0))
        throw SchemeError("single-user schemes require a positive BS-user distance");
    SingleUserCase c;
    c.bs_user_distance = w.x();
    c.altitude = sc.altitude;
    c.qx_min = sc.region.x_min;
    c.qx_max = sc.region.x_max;
    c.params = sc.params;
    return c;
}

Solution pack_closed_form(const Scenario &sc, Scheme scheme,
                          const JointResult &r, const DriverOptions &opt,
                          const Stopwatch &clock)
{
    Solution sol;
    sol.scheme = scheme;
    sol.pose = Pose{Vec3(r.qx, 0.0, sc.altitude), EulerAngles{0.0, r.psi_y, 0.0}};
    sol.phases = inphase_profile(link_angles(sc, sol.pose), 0, sc.params);
    sol.snr = r.snr;
    sol.trace.push_back({0, "closed_form", r.snr});
    sol.seed = opt.seed;
    sol.runtime_ms = clock.ms();
    return sol;
}

} // namespace

std::string_view scheme_token(Scheme s)
{
    for (const SchemeName &n : k_schemes)
        if (n.scheme == s)
            return n.token;
    throw ConfigError("unknown scheme value");
}

Scheme parse_scheme(std::string_view token)
{
    for (const SchemeName &n : k_schemes)
        if (n.token == token)
            return n.scheme;
    throw ConfigError("unknown scheme token: " + std::string(token));
}

bool scheme_is_single_user(Scheme s)
{
    return s == Scheme::joint || s == Scheme::orientation_only ||
           s == Scheme::location_only;
}

std::vector<Scheme> all_schemes()
{
    std::vector<Scheme> out;
    for (const SchemeName &n : k_schemes)
        out.push_back(n.scheme);
    return out;
}

double StagePoint::snr_db() const
{
    return to_db(snr);
}

double Solution::snr_db() const
{
    return to_db(snr);
}

void DriverOptions::validate() const
{
    if (ao_iterations < 1)
        throw ConfigError("at least one alternating optimization iteration is required");
    location.coarse.validate();
    location.fine.validate();
    orientation.coarse.validate();
    orientation.fine.validate();
    gs.validate();
}

Vec3 init_location(const Scenario &sc, const LocationSearchOptions &opt)
{
    const double h = sc.altitude;
    auto score = [&](double x, double y) {
        const Vec3 q(x, y, h);
        const double r1sq = (q - sc.bs).squaredNorm();
        double worst = std::numeric_limits<double>::infinity();
        for (const Vec3 &w : sc.users)
            worst = std::min(worst, 1.0 / (r1sq * (q - w).squaredNorm()));
        return worst;
    };
    const LocationOutcome out =
        search_location(sc.region, score, sc.region.x_min, sc.region.y_min, 0.0, opt);
    return Vec3(out.x, out.y, h);
}

EulerAngles init_orientation(const Scenario &sc, const Vec3 &position,
                             const OrientationSearchOptions &opt)
{
    if (sc.isotropic)
        return EulerAngles{}; // every orientation is equivalent
    auto score = [&](const EulerAngles &angles) {
        const Pose pose{position, angles};
        double worst = std::numeric_limits<double>::infinity();
        for (int l = 0; l < int(sc.users.size()); ++l)
            worst = std::min(worst, effective_aperture_gain(sc, pose, l));
        return worst;
    };
    const EulerAngles flat{};
    const OrientationOutcome out =
        search_orientation(score, flat, score(flat), opt);
    return out.angles;
}

PhaseProfile init_phases(const Scenario &sc, const Pose &pose,
                         const ScaOptions &opt)
{
    const std::vector<double> unit(sc.users.size(), 1.0);
    return solve_profile(sc, pose, opt, unit);
}

Solution ao_run(const Scenario &sc, const DriverOptions &opt,
                bool use_exploration, bool guard_stages, bool lock_orientation)
{
    sc.validate();
    opt.validate();
    const Stopwatch clock;

    Pose pose;
    pose.position = init_location(sc, opt.location);
    pose.angles = lock_orientation
                      ? EulerAngles{}
                      : init_orientation(sc, pose.position, opt.orientation);
    PhaseProfile theta = init_phases(sc, pose, opt.sca);
    double best = min_snr(sc, pose, theta);

    Solution sol;
    sol.seed = opt.seed;
    sol.trace.push_back({0, "init", best});

    std::mt19937_64 rng(opt.seed);
    for (int j = 1; j <= opt.ao_iterations; ++j)
    {
        const LocationOutcome lo = optimize_location(sc, pose, theta, opt.location);
        if (!guard_stages || lo.score >= best)
        {
            pose.position = Vec3(lo.x, lo.y, sc.altitude);
            best = lo.score;
        }
        sol.trace.push_back({j, "location", best});

        if (!lock_orientation)
        {
            const OrientationOutcome oo =
                optimize_orientation(sc, pose, theta, opt.orientation);
            if (!guard_stages || oo.score >= best)
            {
                pose.angles = oo.angles;
                best = oo.score;
            }
            sol.trace.push_back({j, "orientation", best});
        }

        PhaseProfile refined =
            optimize_phases(sc, pose, opt.sca, guard_stages ? &theta : nullptr);
        const double refined_score = min_snr(sc, pose, refined);
        if (!guard_stages || refined_score >= best)
        {
            theta = std::move(refined);
            best = refined_score;
        }
        sol.trace.push_back({j, "phases", best});

        if (use_exploration && best > 0.0)
        {
            const GsResult gr = gs_phase(sc, pose, theta, opt.gs, rng);
            pose = gr.pose; // never scores below the incumbent
            best = gr.snr;
            sol.trace.push_back({j, "exploration", best});
        }
    }

    sol.pose = pose;
    sol.phases = theta;
    sol.snr = best;
    sol.runtime_ms = clock.ms();
    return sol;
}

Solution run_scheme(const Scenario &sc, Scheme scheme, const DriverOptions &opt)
{
    const Stopwatch clock;
    switch (scheme)
    {
    case Scheme::joint:
        return pack_closed_form(sc, scheme, solve_joint(single_case(sc)), opt, clock);
    case Scheme::orientation_only:
        return pack_closed_form(sc, scheme, orientation_only(single_case(sc)), opt,
                                clock);
    case Scheme::location_only:
        return pack_closed_form(sc, scheme, location_only(single_case(sc)), opt,
                                clock);
    case Scheme::isotropic_bound:
        if (sc.users.size() == 1)
            return pack_closed_form(sc, scheme, isotropic_bound(single_case(sc)),
                                    opt, clock);
        else
        {
            Scenario iso = sc;
            iso.isotropic = true;
            Solution sol = ao_run(iso, opt, true, true, false);
            sol.scheme = scheme;
            return sol;
        }
    case Scheme::ao_with_gs:
    {
        Solution sol = ao_run(sc, opt, true, true, false);
        sol.scheme = scheme;
        return sol;
    }
    case Scheme::ao_no_gs:
    {
        Solution sol = ao_run(sc, opt, false, true, false);
        sol.scheme = scheme;
        return sol;
    }
    case Scheme::no_orientation:
    {
        Solution sol = ao_run(sc, opt, false, true, true);
        sol.scheme = scheme;
        return sol;
    }
    case Scheme::individual_optimization:
    {
        sc.validate();
        opt.validate();
        Solution sol;
        sol.scheme = scheme;
        sol.seed = opt.seed;
        sol.pose.position = init_location(sc, opt.location);
        sol.pose.angles = init_orientation(sc, sol.pose.position, opt.orientation);
        sol.phases = init_phases(sc, sol.pose, opt.sca);
        sol.snr = min_snr(sc, sol.pose, sol.phases);
        sol.trace.push_back({0, "init", sol.snr});
        sol.runtime_ms = clock.ms();
        return sol;
    }
    }
    throw ConfigError("unknown scheme value");
}

} // namespace a6d
