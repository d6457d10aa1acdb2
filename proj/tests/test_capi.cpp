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
// Exercises the shared library through its C interface only; no internal
// headers are visible here.

#include <catch2/catch_amalgamated.hpp>

#include <string>

#include <airs6dma/airs6dma.h>

namespace
{

// RAII wrappers so failed REQUIREs cannot leak handles.
struct ConfigHandle
{
    a6d_config *ptr = nullptr;
    ~ConfigHandle() { a6d_config_free(ptr); }
};

struct ReportHandle
{
    a6d_report *ptr = nullptr;
    ~ReportHandle() { a6d_report_free(ptr); }
};

struct StringHandle
{
    char *ptr = nullptr;
    ~StringHandle() { a6d_string_free(ptr); }
};

constexpr const char *k_tiny_config = "[radio]\n"
                                      "bs_antennas = 16\n"
                                      "elements_x = 8\n"
                                      "elements_y = 8\n"
                                      "[algorithm]\n"
                                      "ao_iterations = 1\n"
                                      "location_coarse = 12 8\n"
                                      "location_fine = 4 4\n"
                                      "orientation_coarse = 6 6 6\n"
                                      "orientation_fine = 2 2 2\n"
                                      "gs_iterations = 10\n"
                                      "gs_candidates = 11\n"
                                      "sca_max_iterations = 10\n"
                                      "sca_objective_tol = 1e-3\n"
                                      "sdp_gap_tol = 1e-7\n";

} // namespace

TEST_CASE("version and thread control")
{
    REQUIRE(std::string(a6d_version()) == "1.0.0");
    REQUIRE(a6d_set_threads(1) == A6D_OK);
}

TEST_CASE("default config serializes and round-trips")
{
    ConfigHandle cfg;
    REQUIRE(a6d_config_default(&cfg.ptr) == A6D_OK);
    REQUIRE(cfg.ptr != nullptr);
    REQUIRE(a6d_config_threads(cfg.ptr) == 1);

    REQUIRE(a6d_config_set_seed(cfg.ptr, 42) == A6D_OK);
    REQUIRE(a6d_config_set_threads(cfg.ptr, 2) == A6D_OK);
    REQUIRE(a6d_config_threads(cfg.ptr) == 2);

    StringHandle text;
    REQUIRE(a6d_config_serialize(cfg.ptr, &text.ptr) == A6D_OK);
    const std::string serialized(text.ptr);
    REQUIRE(serialized.find("seed = 42\n") != std::string::npos);
    REQUIRE(serialized.find("threads = 2\n") != std::string::npos);

    ConfigHandle back;
    REQUIRE(a6d_config_parse(text.ptr, &back.ptr) == A6D_OK);
    StringHandle text2;
    REQUIRE(a6d_config_serialize(back.ptr, &text2.ptr) == A6D_OK);
    REQUIRE(serialized == std::string(text2.ptr));
}

TEST_CASE("empty text parses to defaults")
{
    ConfigHandle cfg;
    REQUIRE(a6d_config_parse("", &cfg.ptr) == A6D_OK);
    StringHandle text;
    REQUIRE(a6d_config_serialize(cfg.ptr, &text.ptr) == A6D_OK);
    REQUIRE(std::string(text.ptr).find("id = sparse\n") != std::string::npos);
}

TEST_CASE("parse failures report a line number and leave out untouched")
{
    ConfigHandle cfg;
    REQUIRE(a6d_config_parse("[scenario]\naltitude_m = nope\n", &cfg.ptr) ==
            A6D_ERR_CONFIG);
    REQUIRE(cfg.ptr == nullptr); // out parameter untouched on failure
    const std::string msg = a6d_last_error();
    REQUIRE(msg.find(":2:") != std::string::npos);
    REQUIRE(msg.find("nope") != std::string::npos);

    REQUIRE(a6d_config_load("no_such_file.ini", &cfg.ptr) == A6D_ERR_CONFIG);
    REQUIRE(cfg.ptr == nullptr);
}

TEST_CASE("NULL arguments are rejected as invalid")
{
    ConfigHandle cfg;
    REQUIRE(a6d_config_parse(nullptr, &cfg.ptr) == A6D_ERR_INVALID);
    REQUIRE(a6d_config_parse("", nullptr) == A6D_ERR_INVALID);
    REQUIRE(a6d_config_default(nullptr) == A6D_ERR_INVALID);
    REQUIRE(a6d_config_serialize(nullptr, nullptr) == A6D_ERR_INVALID);
    REQUIRE(a6d_config_set_seed(nullptr, 1) == A6D_ERR_INVALID);
    REQUIRE(a6d_config_threads(nullptr) == 0);

    const double d = 500.0;
    a6d_report *rep = nullptr;
    REQUIRE(a6d_run_single_sweep_d(nullptr, &d, 1, nullptr, &rep) ==
            A6D_ERR_INVALID);
    REQUIRE(rep == nullptr);

    REQUIRE(a6d_config_default(&cfg.ptr) == A6D_OK);
    REQUIRE(a6d_run_single_sweep_d(cfg.ptr, nullptr, 1, nullptr, &rep) ==
            A6D_ERR_INVALID);
    REQUIRE(rep == nullptr);

    // report accessors tolerate NULL
    REQUIRE(std::string(a6d_report_result_csv(nullptr)).empty());
    REQUIRE(std::string(a6d_report_text(nullptr)).empty());
    REQUIRE(a6d_report_row_count(nullptr) == 0);
    REQUIRE(a6d_report_all_passed(nullptr) == 0);
    a6d_report_free(nullptr); // must be a no-op
    a6d_string_free(nullptr);
}

TEST_CASE("distance sweep emits CSV through the C interface")
{
    ConfigHandle cfg;
    REQUIRE(a6d_config_default(&cfg.ptr) == A6D_OK);

    const double d = 500.0;
    ReportHandle rep;
    REQUIRE(a6d_run_single_sweep_d(cfg.ptr, &d, 1, nullptr, &rep.ptr) == A6D_OK);
    REQUIRE(rep.ptr != nullptr);
    REQUIRE(a6d_report_row_count(rep.ptr) == 4);
    REQUIRE(a6d_report_all_passed(rep.ptr) == 1);

    const std::string csv = a6d_report_result_csv(rep.ptr);
    REQUIRE(csv.rfind("# airs6dma result schema v1\n", 0) == 0);
    REQUIRE(csv.find("\njoint,") == std::string::npos); // scheme is column 2
    REQUIRE(csv.find(",joint,d=500,") != std::string::npos);
    REQUIRE(csv.find(",isotropic_bound,d=500,") != std::string::npos);
    REQUIRE(std::string(a6d_report_field_map_csv(rep.ptr)).empty());

    const std::string text = a6d_report_text(rep.ptr);
    REQUIRE(text.find("d=500 joint:") != std::string::npos);
    REQUIRE(text.find(" ms") != std::string::npos);
}

TEST_CASE("scheme lists filter runs and reject unknown tokens")
{
    ConfigHandle cfg;
    REQUIRE(a6d_config_default(&cfg.ptr) == A6D_OK);
    const double d = 500.0;

    ReportHandle rep;
    REQUIRE(a6d_run_single_sweep_d(cfg.ptr, &d, 1, " joint , location_only ",
                                   &rep.ptr) == A6D_OK);
    REQUIRE(a6d_report_row_count(rep.ptr) == 2);

    a6d_report *bad = nullptr;
    REQUIRE(a6d_run_single_sweep_d(cfg.ptr, &d, 1, "bogus", &bad) ==
            A6D_ERR_CONFIG);
    REQUIRE(bad == nullptr);
    REQUIRE(std::string(a6d_last_error()).find("bogus") != std::string::npos);

    REQUIRE(a6d_run_single_sweep_d(cfg.ptr, &d, 1, "", &bad) == A6D_ERR_CONFIG);
    REQUIRE(bad == nullptr);

    // multicast schemes are not part of the single-user family
    REQUIRE(a6d_run_single_sweep_d(cfg.ptr, &d, 1, "ao_with_gs", &bad) ==
            A6D_ERR_CONFIG);
    REQUIRE(bad == nullptr);
}

TEST_CASE("multicast run works on a reduced configuration")
{
    ConfigHandle cfg;
    REQUIRE(a6d_config_parse(k_tiny_config, &cfg.ptr) == A6D_OK);

    const double h = 100.0;
    ReportHandle rep;
    REQUIRE(a6d_run_multi_optimize(cfg.ptr, &h, 1, 0, 0, 0,
                                   "individual_optimization", &rep.ptr) ==
            A6D_OK);
    REQUIRE(a6d_report_row_count(rep.ptr) == 1);
    const std::string csv = a6d_report_result_csv(rep.ptr);
    REQUIRE(csv.find(",individual_optimization,h=100,") != std::string::npos);
    REQUIRE(std::string(a6d_report_field_map_csv(rep.ptr)).empty());

    // field maps demand the exploration scheme in the active set
    a6d_report *bad = nullptr;
    REQUIRE(a6d_run_multi_optimize(cfg.ptr, &h, 1, 1, 6, 4,
                                   "individual_optimization",
                                   &bad) == A6D_ERR_CONFIG);
    REQUIRE(bad == nullptr);
}
