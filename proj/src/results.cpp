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

#include "results.hpp"

#include <charconv>

namespace a6d
{
namespace
{

void append_number(std::string &out, double v)
{
    char buf[64];
    const std::to_chars_result r = std::to_chars(buf, buf + sizeof buf, v);
    out.append(buf, r.ptr);
}

} // namespace

ResultRow make_result_row(const std::string &scenario_id,
                          const std::string &case_id, const Solution &sol)
{
    ResultRow row;
    row.scenario_id = scenario_id;
    row.scheme = std::string(scheme_token(sol.scheme));
    row.case_id = case_id;
    row.h_m = sol.pose.position.z();
    row.gamma_min_db = sol.snr_db();
    row.qx_m = sol.pose.position.x();
    row.qy_m = sol.pose.position.y();
    row.psi_z_rad = sol.pose.angles.psi_z;
    row.psi_y_rad = sol.pose.angles.psi_y;
    row.psi_x_rad = sol.pose.angles.psi_x;
    row.seed = sol.seed;
    return row;
}

std::string result_csv(const std::vector<ResultRow> &rows)
{
    std::string out = "# airs6dma result schema v1\n";
    out += "scenario_id,scheme,case_id,h_m,gamma_min_db,qx_m,qy_m,"
           "psi_z_rad,psi_y_rad,psi_x_rad,seed\n";
    for (const ResultRow &r : rows)
    {
        out += r.scenario_id;
        out += ',';
        out += r.scheme;
        out += ',';
        out += r.case_id;
        out += ',';
        append_number(out, r.h_m);
        out += ',';
        append_number(out, r.gamma_min_db);
        out += ',';
        append_number(out, r.qx_m);
        out += ',';
        append_number(out, r.qy_m);
        out += ',';
        append_number(out, r.psi_z_rad);
        out += ',';
        append_number(out, r.psi_y_rad);
        out += ',';
        append_number(out, r.psi_x_rad);
        out += ',';
        out += std::to_string(r.seed);
        out += '\n';
    }
    return out;
}

std::string field_map_csv(const std::vector<FieldMapRow> &rows)
{
    std::string out = "# airs6dma field map schema v1\n";
    out += "h_m,qx_m,qy_m,path_gain_db,aperture_gain_db,bf_gain_db,min_snr_db\n";
    for (const FieldMapRow &r : rows)
    {
        append_number(out, r.h_m);
        out += ',';
        append_number(out, r.qx_m);
        out += ',';
        append_number(out, r.qy_m);
        out += ',';
        append_number(out, r.path_gain_db);
        out += ',';
        append_number(out, r.aperture_gain_db);
        out += ',';
        append_number(out, r.bf_gain_db);
        out += ',';
        append_number(out, r.min_snr_db);
        out += '\n';
    }
    return out;
}

} // namespace a6d
