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

#include "airs6dma/airs6dma.h"

#include <cstring>
#include <exception>
#include <new>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "config.hpp"
#include "driver.hpp"
#include "errors.hpp"
#include "results.hpp"
#include "sweeps.hpp"
#include "threads.hpp"
#include "verify.hpp"

struct a6d_config
{
    a6d::Config cfg;
};

struct a6d_report
{
    std::string result_csv;
    std::string field_map_csv;
    std::string text;
    size_t rows = 0;
    bool passed = true;
};

namespace
{

thread_local std::string g_last_error;

a6d_status fail(a6d_status code, const std::string &message)
{
    g_last_error = message;
    return code;
}

// Maps the library exception taxonomy onto status codes.
template <typename Fn>
a6d_status guarded(Fn &&fn)
{
    try
    {
        fn();
        return A6D_OK;
    }
    catch (const a6d::ConfigError &e)
    {
        return fail(A6D_ERR_CONFIG, e.what());
    }
    catch (const a6d::SolverError &e)
    {
        return fail(A6D_ERR_SOLVER, e.what());
    }
    catch (const a6d::SchemeError &e)
    {
        return fail(A6D_ERR_INVALID, e.what());
    }
    catch (const a6d::InfeasiblePoseError &e)
    {
        return fail(A6D_ERR_SOLVER, e.what());
    }
    catch (const std::invalid_argument &e)
    {
        return fail(A6D_ERR_INVALID, e.what());
    }
    catch (const std::bad_alloc &)
    {
        return fail(A6D_ERR_INTERNAL, "out of memory");
    }
    catch (const std::exception &e)
    {
        return fail(A6D_ERR_INTERNAL, e.what());
    }
    catch (...)
    {
        return fail(A6D_ERR_INTERNAL, "unknown failure");
    }
}

std::vector<a6d::Scheme> parse_scheme_csv(const char *schemes)
{
    std::vector<a6d::Scheme> out;
    if (schemes == nullptr)
        return out;
    std::string_view rest(schemes);
    while (!rest.empty())
    {
        const size_t comma = rest.find(',');
        std::string_view token = rest.substr(0, comma);
        rest = (comma == std::string_view::npos) ? std::string_view{}
                                                 : rest.substr(comma + 1);
        while (!token.empty() && (token.front() == ' ' || token.front() == '\t'))
            token.remove_prefix(1);
        while (!token.empty() && (token.back() == ' ' || token.back() == '\t'))
            token.remove_suffix(1);
        if (!token.empty())
            out.push_back(a6d::parse_scheme(token)); // throws ConfigError
    }
    if (schemes != nullptr && out.empty())
        throw a6d::ConfigError("scheme list is empty");
    return out;
}

// Wall-clock diagnostics; these stay out of the CSV so reruns are
// byte-identical.
std::string diagnostics(const a6d::SweepOutcome &outcome)
{
    std::ostringstream os;
    for (size_t i = 0; i < outcome.solutions.size(); ++i)
    {
        const a6d::Solution &s = outcome.solutions[i];
        const a6d::ResultRow &row = outcome.rows.at(i);
        os << row.case_id << " " << row.scheme << ": " << row.gamma_min_db
           << " dB, " << s.runtime_ms << " ms\n";
    }
    return os.str();
}

a6d_status make_report(a6d_report **out, a6d::SweepOutcome outcome)
{
    a6d_report *rep = new a6d_report;
    rep->rows = outcome.rows.size();
    rep->result_csv = a6d::result_csv(outcome.rows);
    if (!outcome.maps.empty())
        rep->field_map_csv = a6d::field_map_csv(outcome.maps);
    rep->text = diagnostics(outcome);
    rep->passed = true;
    *out = rep;
    return A6D_OK;
}

a6d_status require(bool ok, const char *message)
{
    return ok ? A6D_OK : fail(A6D_ERR_INVALID, message);
}

} // namespace

extern "C"
{

const char *a6d_version(void) { return "1.0.0"; }

const char *a6d_last_error(void) { return g_last_error.c_str(); }

void a6d_string_free(char *s) { delete[] s; }

a6d_status a6d_set_threads(int n)
{
    return guarded([&] { a6d::set_thread_count(n); });
}

a6d_status a6d_config_default(a6d_config **out)
{
    if (a6d_status st = require(out != nullptr, "out must not be NULL"))
        return st;
    return guarded([&] { *out = new a6d_config{}; });
}

a6d_status a6d_config_parse(const char *text, a6d_config **out)
{
    if (a6d_status st = require(text != nullptr && out != nullptr,
                                "text and out must not be NULL"))
        return st;
    return guarded([&] {
        a6d::Config cfg = a6d::parse_config(text);
        *out = new a6d_config{std::move(cfg)};
    });
}

a6d_status a6d_config_load(const char *path, a6d_config **out)
{
    if (a6d_status st = require(path != nullptr && out != nullptr,
                                "path and out must not be NULL"))
        return st;
    return guarded([&] {
        a6d::Config cfg = a6d::load_config(path);
        *out = new a6d_config{std::move(cfg)};
    });
}

a6d_status a6d_config_serialize(const a6d_config *cfg, char **out)
{
    if (a6d_status st = require(cfg != nullptr && out != nullptr,
                                "cfg and out must not be NULL"))
        return st;
    return guarded([&] {
        const std::string text = a6d::serialize_config(cfg->cfg);
        char *buf = new char[text.size() + 1];
        std::memcpy(buf, text.c_str(), text.size() + 1);
        *out = buf;
    });
}

a6d_status a6d_config_set_seed(a6d_config *cfg, uint64_t seed)
{
    if (a6d_status st = require(cfg != nullptr, "cfg must not be NULL"))
        return st;
    cfg->cfg.seed = seed;
    return A6D_OK;
}

a6d_status a6d_config_set_threads(a6d_config *cfg, int threads)
{
    if (a6d_status st = require(cfg != nullptr, "cfg must not be NULL"))
        return st;
    if (a6d_status st = require(threads >= 1, "threads must be at least 1"))
        return st;
    cfg->cfg.threads = threads;
    return A6D_OK;
}

int a6d_config_threads(const a6d_config *cfg)
{
    return cfg == nullptr ? 0 : cfg->cfg.threads;
}

void a6d_config_free(a6d_config *cfg) { delete cfg; }

a6d_status a6d_run_single_sweep_d(const a6d_config *cfg, const double *d_list,
                                  size_t n, const char *schemes,
                                  a6d_report **out)
{
    if (a6d_status st = require(cfg != nullptr && out != nullptr &&
                                    (n == 0 || d_list != nullptr),
                                "cfg, out and a non-NULL list are required"))
        return st;
    return guarded([&] {
        const std::vector<double> list(d_list, d_list + n);
        make_report(out, a6d::single_sweep_d(cfg->cfg, list,
                                             parse_scheme_csv(schemes)));
    });
}

a6d_status a6d_run_single_sweep_h(const a6d_config *cfg, const double *h_list,
                                  size_t n, double distance, int curve_samples,
                                  const char *schemes, a6d_report **out)
{
    if (a6d_status st = require(cfg != nullptr && out != nullptr &&
                                    (n == 0 || h_list != nullptr),
                                "cfg, out and a non-NULL list are required"))
        return st;
    return guarded([&] {
        const std::vector<double> list(h_list, h_list + n);
        make_report(out,
                    a6d::single_sweep_h(cfg->cfg, list, distance, curve_samples,
                                        parse_scheme_csv(schemes)));
    });
}

a6d_status a6d_run_multi_optimize(const a6d_config *cfg, const double *h_list,
                                  size_t n, int field_maps, int map_nx,
                                  int map_ny, const char *schemes,
                                  a6d_report **out)
{
    if (a6d_status st = require(cfg != nullptr && out != nullptr &&
                                    (n == 0 || h_list != nullptr),
                                "cfg, out and a non-NULL list are required"))
        return st;
    return guarded([&] {
        const std::vector<double> list(h_list, h_list + n);
        make_report(out,
                    a6d::multi_optimize(cfg->cfg, list, field_maps != 0, map_nx,
                                        map_ny, parse_scheme_csv(schemes)));
    });
}

a6d_status a6d_run_verify(a6d_report **out)
{
    if (a6d_status st = require(out != nullptr, "out must not be NULL"))
        return st;
    return guarded([&] {
        const std::vector<a6d::CheckResult> checks = a6d::run_acceptance();
        a6d_report *rep = new a6d_report;
        rep->text = a6d::render_report(checks);
        rep->passed = a6d::all_passed(checks);
        rep->rows = checks.size();
        *out = rep;
    });
}

const char *a6d_report_result_csv(const a6d_report *r)
{
    return r == nullptr ? "" : r->result_csv.c_str();
}

const char *a6d_report_field_map_csv(const a6d_report *r)
{
    return r == nullptr ? "" : r->field_map_csv.c_str();
}

const char *a6d_report_text(const a6d_report *r)
{
    return r == nullptr ? "" : r->text.c_str();
}

size_t a6d_report_row_count(const a6d_report *r)
{
    return r == nullptr ? 0 : r->rows;
}

int a6d_report_all_passed(const a6d_report *r)
{
    return (r != nullptr && r->passed) ? 1 : 0;
}

void a6d_report_free(a6d_report *r) { delete r; }

} // extern "C"
