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

#include <string>
#include <vector>

#include "config.hpp"
#include "results.hpp"

namespace a6d
{

// Result rows plus the underlying solutions (for diagnostics such as
// wall-clock times, which stay out of the CSV).
struct SweepOutcome
{
    std::vector<ResultRow> rows;
    std::vector<FieldMapRow> maps; // empty unless field maps were requested
    std::vector<Solution> solutions;
};

// Single-user benchmark sweep over base-station-to-user distances. For each
// distance the analytic case uses the configured radio constants and
// altitude, the standard placement interval, and the four single-user
// schemes: joint, orientation_only, location_only, isotropic_bound. The
// configured user list is not used. case_id is "d=<distance>". A non-empty
// `schemes` list restricts the run to that subset; schemes outside the
// single-user family raise ConfigError.
SweepOutcome single_sweep_d(const Config &cfg, const std::vector<double> &d_list,
                            const std::vector<Scheme> &schemes = {});

// Single-user benchmark sweep over altitudes at a fixed distance. Emits one
// row per scheme and altitude (case_id "h=<altitude>") plus `curve_samples`
// rows per altitude with scheme "pitch_curve": uniform placements qx over the
// standard interval with the closed-form optimal pitch in psi_y_rad and the
// pitch-optimal SNR in gamma_min_db. Curve rows are independent of the
// scheme subset; pass curve_samples = 0 to drop them.
SweepOutcome single_sweep_h(const Config &cfg, const std::vector<double> &h_list,
                            double distance = 500.0, int curve_samples = 61,
                            const std::vector<Scheme> &schemes = {});

// Multicast optimization sweep over altitudes on the configured user set,
// running ao_with_gs, ao_no_gs, individual_optimization and no_orientation
// per altitude (or the given subset of that family). With `field_maps` each
// altitude additionally samples a map_nx x map_ny position grid over the
// region at the ao_with_gs solution's orientation and phase profile,
// recording worst-user path gain, aperture factor, beamforming gain and SNR;
// field maps therefore require ao_with_gs in the effective scheme set.
SweepOutcome multi_optimize(const Config &cfg, const std::vector<double> &h_list,
                            bool field_maps = false, int map_nx = 48,
                            int map_ny = 24,
                            const std::vector<Scheme> &schemes = {});

// "d=500"-style case labels with shortest round-trip number formatting.
std::string case_label(const char *prefix, double value);

} // namespace a6d
