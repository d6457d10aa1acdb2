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

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "driver.hpp"
#include "scenario.hpp"

namespace a6d
{

// Experiment configuration in file units: meters, degrees, dB and dBm. The
// struct mirrors the INI-style file one key per field, so parse -> serialize
// -> parse is an exact identity; conversion to linear watts and radians
// happens only in the scenario() / radio() / driver() accessors.
//
// Grammar (LF or CRLF):
//   full-line comments start with '#' or ';'
//   [scenario] | [radio] | [algorithm] | [run] open a section
//   key = value          values with several numbers are space-separated
//   user = <x> <y>       repeatable; the first occurrence replaces the
//                        default user list
// Unknown sections or keys, duplicate keys (other than user), malformed
// numbers and out-of-range values raise ConfigError with the offending line.
struct Config
{
    // [scenario]
    std::string scenario_id = "sparse";
    double altitude_m = 100.0;
    std::vector<std::array<double, 2>> users_m = {
        {330.0, 240.0}, {650.0, 130.0}, {440.0, 15.0}};
    std::array<double, 4> region_m = {-140.0, 790.0, -58.0, 298.0};

    // [radio]
    double wavelength_m = 0.1;
    double tx_spacing_m = 0.05;
    double element_spacing_m = 0.05;
    int bs_antennas = 64;
    int elements_x = 16;
    int elements_y = 16;
    double ref_path_gain_db = -40.0;
    double tx_power_dbm = 20.0;
    double noise_dbm = -110.0;

    // [algorithm]
    int ao_iterations = 3;
    std::array<int, 2> location_coarse = {100, 100};
    std::array<int, 2> location_fine = {100, 100};
    std::array<int, 3> orientation_coarse = {60, 60, 60};
    std::array<int, 3> orientation_fine = {3, 3, 3};
    int gs_iterations = 400;
    int gs_candidates = 30;
    double gs_softmax_scale = 20.0;
    double gs_location_step_m = 5.0;
    double gs_orientation_step_deg = 1.0;
    double gs_revisit_penalty_db = 3.0;
    double sca_penalty = 10.0;
    int sca_max_iterations = 50;
    double sca_objective_tol = 1e-5;
    double sdp_gap_tol = 1e-9;

    // [run]
    std::uint64_t seed = 1;
    int threads = 1;

    bool operator==(const Config &) const = default;

    // Semantic checks beyond the grammar (positive sizes, ordered region
    // bounds, finite values). Throws ConfigError naming the key.
    void validate() const;

    SystemParams radio() const;
    Scenario scenario() const;
    DriverOptions driver() const;
};

// Parses config text. `origin` prefixes error messages (file name or
// "<string>"). Throws ConfigError.
Config parse_config(std::string_view text, std::string_view origin = "<string>");

// Reads and parses a config file. Throws ConfigError when unreadable.
Config load_config(const std::string &path);

// Canonical text form: fixed section and key order, shortest round-trip
// number formatting.
std::string serialize_config(const Config &cfg);

} // namespace a6d
