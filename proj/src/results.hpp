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

#include <cstdint>
#include <string>
#include <vector>

#include "driver.hpp"

namespace a6d
{

// One optimization outcome. Wall-clock time is deliberately not a column so
// that reruns with the same config and seed emit byte-identical files; it is
// reported on the diagnostic stream instead.
struct ResultRow
{
    std::string scenario_id;
    std::string scheme;
    std::string case_id; // sweep point, e.g. "d=500" or "h=100"
    double h_m = 0.0;
    double gamma_min_db = 0.0; // worst-user SNR [dB]; "-inf" when unservable
    double qx_m = 0.0;
    double qy_m = 0.0;
    double psi_z_rad = 0.0;
    double psi_y_rad = 0.0;
    double psi_x_rad = 0.0;
    std::uint64_t seed = 1;
};

// One sample of the diagnostic maps over candidate surface positions at a
// fixed optimized orientation and phase profile.
struct FieldMapRow
{
    double h_m = 0.0;
    double qx_m = 0.0;
    double qy_m = 0.0;
    double path_gain_db = 0.0;     // worst-user two-hop path gain
    double aperture_gain_db = 0.0; // worst-user effective aperture factor
    double bf_gain_db = 0.0;       // worst-user passive beamforming gain
    double min_snr_db = 0.0;
};

ResultRow make_result_row(const std::string &scenario_id,
                          const std::string &case_id, const Solution &sol);

// CSV with '.' decimal, LF line endings, shortest round-trip numbers and the
// literal token -inf for unservable poses. The first line is a schema-version
// comment, the second the column header.
std::string result_csv(const std::vector<ResultRow> &rows);
std::string field_map_csv(const std::vector<FieldMapRow> &rows);

} // namespace a6d
