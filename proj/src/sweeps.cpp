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

#include "sweeps.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

#include "channel.hpp"
#include "errors.hpp"
#include "single_user.hpp"

namespace a6d
{
namespace
{

const Scheme k_single_schemes[] = {Scheme::joint, Scheme::orientation_only,
                                   Scheme::location_only, Scheme::isotropic_bound};
const Scheme k_multi_schemes[] = {Scheme::ao_with_gs, Scheme::ao_no_gs,
                                  Scheme::individual_optimization,
                                  Scheme::no_orientation};

double db10(double linear) { return 10.0 * std::log10(linear); }

// Uniform samples including both interval endpoints.
double linspace_at(double lo, double hi, int n, int i)
{
    if (n == 1)
        return lo;
    return lo + (hi - lo) * double(i) / double(n - 1);
}

// Empty request -> the full family; otherwise the request, validated
// against the family.
template <std::size_t N>
std::vector<Scheme> effective_schemes(const std::vector<Scheme> &requested,
                                      const Scheme (&family)[N],
                                      const char *command)
{
    if (requested.empty())
        return std::vector<Scheme>(family, family + N);
    for (Scheme s : requested)
    {
        bool allowed = false;
        for (Scheme f : family)
            allowed = allowed || f == s;
        if (!allowed)
            throw ConfigError(std::string(command) + ": scheme '" +
                              std::string(scheme_token(s)) +
                              "' is not available for this command");
    }
    return requested;
}

} // namespace

std::string case_label(const char *prefix, double value)
{
    char buf[64];
    const std::to_chars_result r = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(prefix) + "=" + std::string(buf, r.ptr);
}

SweepOutcome single_sweep_d(const Config &cfg, const std::vector<double> &d_list,
                            const std::vector<Scheme> &schemes)
{
    cfg.validate();
    const SystemParams params = cfg.radio();
    const DriverOptions driver = cfg.driver();
    const std::vector<Scheme> active =
        effective_schemes(schemes, k_single_schemes, "single_sweep_d");

    SweepOutcome out;
    for (double d : d_list)
    {
        const SingleUserCase c = SingleUserCase::standard(d, cfg.altitude_m, params);
        const Scenario sc = c.to_scenario();
        const std::string label = case_label("d", d);
        for (Scheme scheme : active)
        {
            Solution sol = run_scheme(sc, scheme, driver);
            out.rows.push_back(make_result_row(cfg.scenario_id, label, sol));
            out.solutions.push_back(std::move(sol));
        }
    }
    return out;
}

SweepOutcome single_sweep_h(const Config &cfg, const std::vector<double> &h_list,
                            double distance, int curve_samples,
                            const std::vector<Scheme> &schemes)
{
    cfg.validate();
    if (!(distance > 0.0) || !std::isfinite(distance))
        throw ConfigError("single_sweep_h: distance must be positive");
    if (curve_samples < 0)
        throw ConfigError("single_sweep_h: curve_samples must be non-negative");
    const SystemParams params = cfg.radio();
    const DriverOptions driver = cfg.driver();
    const std::vector<Scheme> active =
        effective_schemes(schemes, k_single_schemes, "single_sweep_h");

    SweepOutcome out;
    for (double h : h_list)
    {
        const SingleUserCase c = SingleUserCase::standard(distance, h, params);
        const Scenario sc = c.to_scenario();
        const std::string label = case_label("h", h);
        for (Scheme scheme : active)
        {
            Solution sol = run_scheme(sc, scheme, driver);
            out.rows.push_back(make_result_row(cfg.scenario_id, label, sol));
            out.solutions.push_back(std::move(sol));
        }
        for (int i = 0; i < curve_samples; ++i)
        {
            const double qx = linspace_at(c.qx_min, c.qx_max, curve_samples, i);
            ResultRow row;
            row.scenario_id = cfg.scenario_id;
            row.scheme = "pitch_curve";
            row.case_id = label;
            row.h_m = h;
            row.qx_m = qx;
            row.qy_m = 0.0;
            row.psi_y_rad = optimal_pitch(qx, c);
            row.gamma_min_db = db10(snr_pitch_optimal(qx, c));
            row.seed = cfg.seed;
            out.rows.push_back(std::move(row));
        }
    }
    return out;
}

SweepOutcome multi_optimize(const Config &cfg, const std::vector<double> &h_list,
                            bool field_maps, int map_nx, int map_ny,
                            const std::vector<Scheme> &schemes)
{
    cfg.validate();
    if (field_maps && (map_nx < 2 || map_ny < 2))
        throw ConfigError("multi_optimize: field map grid needs at least 2x2 samples");
    const DriverOptions driver = cfg.driver();
    const std::vector<Scheme> active =
        effective_schemes(schemes, k_multi_schemes, "multi_optimize");
    if (field_maps &&
        std::find(active.begin(), active.end(), Scheme::ao_with_gs) == active.end())
        throw ConfigError("multi_optimize: field maps require the ao_with_gs scheme");

    SweepOutcome out;
    for (double h : h_list)
    {
        Scenario sc = cfg.scenario();
        sc.altitude = h;
        const std::string label = case_label("h", h);

        Solution reference; // ao_with_gs solution anchors the field maps
        for (Scheme scheme : active)
        {
            Solution sol = run_scheme(sc, scheme, driver);
            out.rows.push_back(make_result_row(cfg.scenario_id, label, sol));
            if (scheme == Scheme::ao_with_gs)
                reference = sol;
            out.solutions.push_back(std::move(sol));
        }

        if (!field_maps)
            continue;
        for (int iy = 0; iy < map_ny; ++iy)
        {
            for (int ix = 0; ix < map_nx; ++ix)
            {
                Pose probe;
                probe.position =
                    Vec3(linspace_at(sc.region.x_min, sc.region.x_max, map_nx, ix),
                         linspace_at(sc.region.y_min, sc.region.y_max, map_ny, iy),
                         h);
                probe.angles = reference.pose.angles;
                const std::vector<SnrTerms> terms =
                    evaluate_users(sc, probe, reference.phases);

                FieldMapRow row;
                row.h_m = h;
                row.qx_m = probe.position.x();
                row.qy_m = probe.position.y();
                double path = std::numeric_limits<double>::infinity();
                double aperture = path, bf = path, snr = path;
                for (const SnrTerms &t : terms)
                {
                    path = std::min(path, t.bs_path * t.user_path);
                    aperture = std::min(aperture, t.aperture);
                    bf = std::min(bf, t.bf_gain);
                    snr = std::min(snr, t.snr);
                }
                row.path_gain_db = db10(path);
                row.aperture_gain_db = db10(aperture);
                row.bf_gain_db = db10(bf);
                row.min_snr_db = db10(snr);
                out.maps.push_back(row);
            }
        }
    }
    return out;
}

} // namespace a6d
