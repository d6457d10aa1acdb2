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
// Orchestration: initialization heuristics, the alternating optimization loop
// (location search, orientation search, phase design, optional sampling-based
// exploration), and the benchmark scheme dispatch.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "beamforming.hpp"
#include "channel.hpp"
#include "gibbs.hpp"
#include "scenario.hpp"
#include "search.hpp"

namespace a6d
{

enum class Scheme
{
    joint,                   // single user: location and pitch jointly optimal
    orientation_only,        // single user: location pinned, pitch optimal
    location_only,           // single user: pitch pinned to 0, location searched
    isotropic_bound,         // aperture factor forced to 1 (upper bound)
    ao_with_gs,              // alternating optimization + exploration phase
    ao_no_gs,                // alternating optimization without exploration
    individual_optimization, // one-shot per-variable initialization heuristics
    no_orientation,          // alternating optimization with angles locked to 0
};

std::string_view scheme_token(Scheme s);
Scheme parse_scheme(std::string_view token); // throws ConfigError
bool scheme_is_single_user(Scheme s);
std::vector<Scheme> all_schemes();

struct StagePoint
{
    int iteration = 0; // 0 marks initialization or closed-form evaluation
    std::string stage; // "init", "location", "orientation", "phases", ...
    double snr = 0.0;  // worst-user SNR, linear

    double snr_db() const;
};

struct Solution
{
    Scheme scheme = Scheme::ao_with_gs;
    Pose pose;
    PhaseProfile phases;
    double snr = 0.0; // worst-user SNR, linear
    std::vector<StagePoint> trace;
    std::uint64_t seed = 1;
    double runtime_ms = 0.0;

    double snr_db() const;
};

struct DriverOptions
{
    int ao_iterations = 3;
    LocationSearchOptions location;
    OrientationSearchOptions orientation;
    ScaOptions sca;
    GsOptions gs;
    std::uint64_t seed = 1;

    void validate() const;
};

// Location maximizing the worst-user two-hop path gain
// min_l 1 / (|q - bs|^2 |q - w_l|^2) over the service region (hybrid grid).
Vec3 init_location(const Scenario &sc, const LocationSearchOptions &opt);

// Orientation maximizing the worst-user effective aperture gain at a fixed
// position. Isotropic scenarios skip the search and return the reference
// orientation, since every orientation is equivalent there.
EulerAngles init_orientation(const Scenario &sc, const Vec3 &position,
                             const OrientationSearchOptions &opt);

// Phase profile from the per-axis max-min design with unit user weights.
PhaseProfile init_phases(const Scenario &sc, const Pose &pose,
                         const ScaOptions &opt);

// The full loop: initialization, then ao_iterations rounds of location search,
// orientation search, phase design and (optionally) exploration.
// guard_stages keeps a stage result only when it does not lower the worst-user
// SNR, which makes the trace exactly non-decreasing; without it stage outputs
// are adopted as-is. lock_orientation pins the angles to 0 and disables the
// orientation stage.
Solution ao_run(const Scenario &sc, const DriverOptions &opt,
                bool use_exploration, bool guard_stages,
                bool lock_orientation = false);

// Scheme dispatch. Single-user schemes require exactly one user at (d, 0, 0)
// with the base station at the origin and throw SchemeError otherwise;
// isotropic_bound falls back to a guarded exploration run on an isotropic copy
// of multi-user scenarios.
Solution run_scheme(const Scenario &sc, Scheme scheme, const DriverOptions &opt);

} // namespace a6d
