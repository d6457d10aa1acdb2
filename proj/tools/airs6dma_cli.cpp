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

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "airs6dma/airs6dma.h"

namespace
{

// Exit codes: 0 success, 1 configuration problem, 2 solver or check failure.
constexpr int k_exit_ok = 0;
constexpr int k_exit_config = 1;
constexpr int k_exit_solver = 2;

int exit_code_for(a6d_status status)
{
    switch (status)
    {
    case A6D_OK:
        return k_exit_ok;
    case A6D_ERR_CONFIG:
    case A6D_ERR_INVALID:
        return k_exit_config;
    case A6D_ERR_SOLVER:
    case A6D_ERR_INTERNAL:
    default:
        return k_exit_solver;
    }
}

int report_error(a6d_status status)
{
    std::cerr << "error: " << a6d_last_error() << "\n";
    return exit_code_for(status);
}

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

bool write_text(const std::string &path, const char *text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
    {
        std::cerr << "error: cannot write '" << path << "'\n";
        return false;
    }
    out << text;
    return out.good();
}

// Emits the result CSV (stdout or --out) plus optional field maps and the
// runtime diagnostics on stderr.
int emit(const a6d_report *report, const std::string &out_path,
         const std::string &maps_out, bool field_maps)
{
    const char *csv = a6d_report_result_csv(report);
    if (out_path.empty())
        std::cout << csv;
    else if (!write_text(out_path, csv))
        return k_exit_solver;

    if (field_maps)
    {
        std::string target = maps_out;
        if (target.empty() && !out_path.empty())
            target = out_path + ".maps.csv";
        if (target.empty())
        {
            std::cerr << "error: --field-maps needs --maps-out (or --out to "
                         "derive a map path)\n";
            return k_exit_config;
        }
        if (!write_text(target, a6d_report_field_map_csv(report)))
            return k_exit_solver;
        std::cerr << "field maps written to " << target << "\n";
    }

    std::cerr << a6d_report_text(report);
    if (!out_path.empty())
        std::cerr << a6d_report_row_count(report) << " rows written to "
                  << out_path << "\n";
    return k_exit_ok;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"airs6dma: joint placement, 3D orientation and passive "
                 "beamforming for an aerial reflecting surface"};
    app.set_version_flag("--version", a6d_version());
    app.require_subcommand(1);

    std::string config_path;
    std::uint64_t seed = 0;
    int threads = 0;
    std::string out_path;
    std::string maps_out;
    std::string schemes;
    app.add_option("--config", config_path,
                   "Configuration file (defaults apply when omitted)");
    auto *seed_opt =
        app.add_option("--seed", seed, "Override the configured seed");
    auto *threads_opt = app.add_option(
        "--threads", threads, "Override the configured worker thread count");
    app.add_option("--out", out_path, "Write result CSV here (default stdout)");
    app.add_option("--scheme", schemes,
                   "Comma-separated scheme subset for the chosen command");

    auto *sweep_d = app.add_subcommand(
        "single-sweep-d",
        "Single-user schemes across base-station-to-user distances");
    sweep_d->fallthrough(); // global options may follow the subcommand
    std::vector<double> d_list;
    sweep_d->add_option("--d-list", d_list, "Distances in meters")
        ->delimiter(',');

    auto *sweep_h = app.add_subcommand(
        "single-sweep-h", "Single-user schemes across surface altitudes");
    sweep_h->fallthrough();
    std::vector<double> h_list_single;
    double distance = 500.0;
    int curve_samples = 61;
    sweep_h->add_option("--h-list", h_list_single, "Altitudes in meters")
        ->delimiter(',');
    sweep_h->add_option("--distance", distance,
                        "Base-station-to-user distance in meters");
    sweep_h->add_option("--curve-samples", curve_samples,
                        "Optimal-pitch curve samples per altitude (0 disables)");

    auto *multi = app.add_subcommand(
        "multi-optimize", "Multicast optimization schemes on the configured users");
    multi->fallthrough();
    std::vector<double> h_list_multi;
    bool field_maps = false;
    std::vector<int> map_grid = {48, 24};
    multi->add_option("--h-list", h_list_multi, "Altitudes in meters")
        ->delimiter(',');
    multi->add_flag("--field-maps", field_maps,
                    "Also sample diagnostic maps over the placement region");
    multi->add_option("--map-grid", map_grid, "Field map grid: NX NY")
        ->expected(2);
    multi->add_option("--maps-out", maps_out, "Write field map CSV here");

    auto *verify = app.add_subcommand(
        "verify", "Run the built-in verification suite (several minutes)");
    verify->fallthrough();

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int rc = app.exit(e); // prints the message or help text
        return rc == 0 ? k_exit_ok : k_exit_config;
    }

    ConfigHandle cfg;
    a6d_status status = config_path.empty()
                            ? a6d_config_default(&cfg.ptr)
                            : a6d_config_load(config_path.c_str(), &cfg.ptr);
    if (status != A6D_OK)
        return report_error(status);
    if (seed_opt->count() > 0)
    {
        if ((status = a6d_config_set_seed(cfg.ptr, seed)) != A6D_OK)
            return report_error(status);
    }
    if (threads_opt->count() > 0)
    {
        if ((status = a6d_config_set_threads(cfg.ptr, threads)) != A6D_OK)
            return report_error(status);
    }
    if ((status = a6d_set_threads(a6d_config_threads(cfg.ptr))) != A6D_OK)
        return report_error(status);

    const char *scheme_csv = schemes.empty() ? nullptr : schemes.c_str();
    ReportHandle report;

    if (sweep_d->parsed())
    {
        if (d_list.empty())
            d_list = {200, 300, 400, 500, 600, 700, 800, 900, 1000};
        status = a6d_run_single_sweep_d(cfg.ptr, d_list.data(), d_list.size(),
                                        scheme_csv, &report.ptr);
        if (status != A6D_OK)
            return report_error(status);
        return emit(report.ptr, out_path, maps_out, false);
    }
    if (sweep_h->parsed())
    {
        if (h_list_single.empty())
            h_list_single = {100, 200, 300, 400, 500, 600, 700, 800, 900, 1000};
        status = a6d_run_single_sweep_h(cfg.ptr, h_list_single.data(),
                                        h_list_single.size(), distance,
                                        curve_samples, scheme_csv, &report.ptr);
        if (status != A6D_OK)
            return report_error(status);
        return emit(report.ptr, out_path, maps_out, false);
    }
    if (multi->parsed())
    {
        if (h_list_multi.empty())
            h_list_multi = {100};
        status = a6d_run_multi_optimize(cfg.ptr, h_list_multi.data(),
                                        h_list_multi.size(), field_maps ? 1 : 0,
                                        map_grid[0], map_grid[1], scheme_csv,
                                        &report.ptr);
        if (status != A6D_OK)
            return report_error(status);
        return emit(report.ptr, out_path, maps_out, field_maps);
    }
    if (verify->parsed())
    {
        status = a6d_run_verify(&report.ptr);
        if (status != A6D_OK)
            return report_error(status);
        const char *text = a6d_report_text(report.ptr);
        if (out_path.empty())
            std::cout << text;
        else if (!write_text(out_path, text))
            return k_exit_solver;
        return a6d_report_all_passed(report.ptr) ? k_exit_ok : k_exit_solver;
    }
    return k_exit_config; // unreachable: a subcommand is required
}
