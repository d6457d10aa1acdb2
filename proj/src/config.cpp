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

#include "config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <system_error>

#include "errors.hpp"
#include "mathfwd.hpp"

namespace a6d
{
namespace
{

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

[[noreturn]] void fail(std::string_view origin, int line, const std::string &what)
{
    std::ostringstream os;
    os << origin << ":" << line << ": " << what;
    throw ConfigError(os.str());
}

std::vector<std::string_view> split_fields(std::string_view value)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < value.size())
    {
        while (i < value.size() && (value[i] == ' ' || value[i] == '\t'))
            ++i;
        std::size_t start = i;
        while (i < value.size() && value[i] != ' ' && value[i] != '\t')
            ++i;
        if (i > start)
            out.push_back(value.substr(start, i - start));
    }
    return out;
}

template <typename T>
T parse_number(std::string_view token, std::string_view origin, int line)
{
    T value{};
    const char *first = token.data();
    const char *last = token.data() + token.size();
    const std::from_chars_result r = std::from_chars(first, last, value);
    if (r.ec != std::errc{} || r.ptr != last)
        fail(origin, line, "cannot parse number '" + std::string(token) + "'");
    return value;
}

template <typename T, std::size_t N>
std::array<T, N> parse_tuple(std::string_view value, std::string_view origin,
                             int line)
{
    const std::vector<std::string_view> fields = split_fields(value);
    if (fields.size() != N)
        fail(origin, line,
             "expected " + std::to_string(N) + " values, got " +
                 std::to_string(fields.size()));
    std::array<T, N> out{};
    for (std::size_t i = 0; i < N; ++i)
        out[i] = parse_number<T>(fields[i], origin, line);
    return out;
}

double dbm_to_watts(double dbm) { return db_to_linear(dbm - 30.0); }

void append_number(std::string &out, double v)
{
    char buf[64];
    const std::to_chars_result r = std::to_chars(buf, buf + sizeof buf, v);
    out.append(buf, r.ptr);
}

void append_number(std::string &out, int v) { out += std::to_string(v); }

void append_number(std::string &out, std::uint64_t v) { out += std::to_string(v); }

template <typename T, std::size_t N>
void append_tuple(std::string &out, const std::array<T, N> &vals)
{
    for (std::size_t i = 0; i < N; ++i)
    {
        if (i)
            out += ' ';
        append_number(out, vals[i]);
    }
}

void require_finite(double v, const char *key)
{
    if (!std::isfinite(v))
        throw ConfigError(std::string(key) + " must be finite");
}

void require_positive(double v, const char *key)
{
    require_finite(v, key);
    if (v <= 0.0)
        throw ConfigError(std::string(key) + " must be positive");
}

void require_at_least(int v, int lo, const char *key)
{
    if (v < lo)
        throw ConfigError(std::string(key) + " must be at least " +
                          std::to_string(lo));
}

} // namespace

void Config::validate() const
{
    if (scenario_id.empty())
        throw ConfigError("id must not be empty");
    for (char c : scenario_id)
    {
        const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                        (c >= '0' && c <= '9') || c == '_' || c == '-';
        if (!ok)
            throw ConfigError("id may contain only letters, digits, '_' and '-'");
    }
    require_positive(altitude_m, "altitude_m");
    if (users_m.empty())
        throw ConfigError("at least one user is required");
    for (const auto &u : users_m)
    {
        require_finite(u[0], "user x");
        require_finite(u[1], "user y");
    }
    for (double v : region_m)
        require_finite(v, "region");
    if (!(region_m[0] < region_m[1]) || !(region_m[2] < region_m[3]))
        throw ConfigError("region must satisfy x_min < x_max and y_min < y_max");

    require_positive(wavelength_m, "wavelength_m");
    require_positive(tx_spacing_m, "tx_spacing_m");
    require_positive(element_spacing_m, "element_spacing_m");
    require_at_least(bs_antennas, 1, "bs_antennas");
    require_at_least(elements_x, 1, "elements_x");
    require_at_least(elements_y, 1, "elements_y");
    require_finite(ref_path_gain_db, "ref_path_gain_db");
    require_finite(tx_power_dbm, "tx_power_dbm");
    require_finite(noise_dbm, "noise_dbm");

    require_at_least(ao_iterations, 1, "ao_iterations");
    require_at_least(location_coarse[0], 1, "location_coarse");
    require_at_least(location_coarse[1], 1, "location_coarse");
    require_at_least(location_fine[0], 1, "location_fine");
    require_at_least(location_fine[1], 1, "location_fine");
    for (int v : orientation_coarse)
        require_at_least(v, 1, "orientation_coarse");
    for (int v : orientation_fine)
        require_at_least(v, 1, "orientation_fine");
    require_at_least(gs_iterations, 1, "gs_iterations");
    require_at_least(gs_candidates, 11, "gs_candidates");
    require_finite(gs_softmax_scale, "gs_softmax_scale");
    if (gs_softmax_scale < 0.0)
        throw ConfigError("gs_softmax_scale must be non-negative");
    require_positive(gs_location_step_m, "gs_location_step_m");
    require_positive(gs_orientation_step_deg, "gs_orientation_step_deg");
    require_finite(gs_revisit_penalty_db, "gs_revisit_penalty_db");
    if (gs_revisit_penalty_db < 0.0)
        throw ConfigError("gs_revisit_penalty_db must be non-negative");
    require_positive(sca_penalty, "sca_penalty");
    require_at_least(sca_max_iterations, 1, "sca_max_iterations");
    require_positive(sca_objective_tol, "sca_objective_tol");
    require_positive(sdp_gap_tol, "sdp_gap_tol");

    require_at_least(threads, 1, "threads");
}

SystemParams Config::radio() const
{
    SystemParams p;
    p.wavelength = wavelength_m;
    p.tx_spacing = tx_spacing_m;
    p.element_spacing = element_spacing_m;
    p.bs_antennas = bs_antennas;
    p.elements_x = elements_x;
    p.elements_y = elements_y;
    p.ref_path_gain = db_to_linear(ref_path_gain_db);
    p.tx_power = dbm_to_watts(tx_power_dbm);
    p.noise_power = dbm_to_watts(noise_dbm);
    return p;
}

Scenario Config::scenario() const
{
    Scenario sc;
    sc.id = scenario_id;
    sc.altitude = altitude_m;
    sc.users.clear();
    sc.users.reserve(users_m.size());
    for (const auto &u : users_m)
        sc.users.emplace_back(u[0], u[1], 0.0);
    sc.region = Region{region_m[0], region_m[1], region_m[2], region_m[3]};
    sc.params = radio();
    return sc;
}

DriverOptions Config::driver() const
{
    DriverOptions d;
    d.ao_iterations = ao_iterations;
    d.location.coarse = GridSpec2{location_coarse[0], location_coarse[1]};
    d.location.fine = GridSpec2{location_fine[0], location_fine[1]};
    d.orientation.coarse =
        GridSpec3{orientation_coarse[0], orientation_coarse[1], orientation_coarse[2]};
    d.orientation.fine =
        GridSpec3{orientation_fine[0], orientation_fine[1], orientation_fine[2]};
    d.gs.iterations = gs_iterations;
    d.gs.candidates = gs_candidates;
    d.gs.softmax_scale = gs_softmax_scale;
    d.gs.location_step = gs_location_step_m;
    d.gs.orientation_step = gs_orientation_step_deg * (pi / 180.0);
    d.gs.revisit_penalty_db = gs_revisit_penalty_db;
    d.gs.seed = seed;
    d.sca.penalty = sca_penalty;
    d.sca.max_iterations = sca_max_iterations;
    d.sca.objective_tol = sca_objective_tol;
    d.sca.sdp.gap_tol = sdp_gap_tol;
    d.seed = seed;
    return d;
}

Config parse_config(std::string_view text, std::string_view origin)
{
    Config cfg;
    std::string section;
    bool users_replaced = false;
    std::set<std::string> seen;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size())
    {
        const std::size_t nl = text.find('\n', pos);
        std::string_view raw = text.substr(
            pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
        ++line_no;

        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#' || line.front() == ';')
            continue;

        if (line.front() == '[')
        {
            if (line.back() != ']')
                fail(origin, line_no, "unterminated section header");
            const std::string_view name = trim(line.substr(1, line.size() - 2));
            if (name != "scenario" && name != "radio" && name != "algorithm" &&
                name != "run")
                fail(origin, line_no, "unknown section '" + std::string(name) + "'");
            section = std::string(name);
            continue;
        }

        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos)
            fail(origin, line_no, "expected 'key = value'");
        const std::string key(trim(line.substr(0, eq)));
        const std::string_view value = trim(line.substr(eq + 1));
        if (key.empty())
            fail(origin, line_no, "empty key");
        if (section.empty())
            fail(origin, line_no, "key outside any [section]");
        if (key != "user" && !seen.insert(section + "/" + key).second)
            fail(origin, line_no,
                 "duplicate key '" + key + "' in [" + section + "]");

        const auto num = [&](double &dst) {
            dst = parse_number<double>(value, origin, line_no);
        };
        const auto integer = [&](int &dst) {
            dst = parse_number<int>(value, origin, line_no);
        };

        bool handled = true;
        if (section == "scenario")
        {
            if (key == "id")
                cfg.scenario_id = std::string(value);
            else if (key == "altitude_m")
                num(cfg.altitude_m);
            else if (key == "user")
            {
                if (!users_replaced)
                {
                    cfg.users_m.clear();
                    users_replaced = true;
                }
                cfg.users_m.push_back(
                    parse_tuple<double, 2>(value, origin, line_no));
            }
            else if (key == "region")
                cfg.region_m = parse_tuple<double, 4>(value, origin, line_no);
            else
                handled = false;
        }
        else if (section == "radio")
        {
            if (key == "wavelength_m")
                num(cfg.wavelength_m);
            else if (key == "tx_spacing_m")
                num(cfg.tx_spacing_m);
            else if (key == "element_spacing_m")
                num(cfg.element_spacing_m);
            else if (key == "bs_antennas")
                integer(cfg.bs_antennas);
            else if (key == "elements_x")
                integer(cfg.elements_x);
            else if (key == "elements_y")
                integer(cfg.elements_y);
            else if (key == "ref_path_gain_db")
                num(cfg.ref_path_gain_db);
            else if (key == "tx_power_dbm")
                num(cfg.tx_power_dbm);
            else if (key == "noise_dbm")
                num(cfg.noise_dbm);
            else
                handled = false;
        }
        else if (section == "algorithm")
        {
            if (key == "ao_iterations")
                integer(cfg.ao_iterations);
            else if (key == "location_coarse")
                cfg.location_coarse = parse_tuple<int, 2>(value, origin, line_no);
            else if (key == "location_fine")
                cfg.location_fine = parse_tuple<int, 2>(value, origin, line_no);
            else if (key == "orientation_coarse")
                cfg.orientation_coarse = parse_tuple<int, 3>(value, origin, line_no);
            else if (key == "orientation_fine")
                cfg.orientation_fine = parse_tuple<int, 3>(value, origin, line_no);
            else if (key == "gs_iterations")
                integer(cfg.gs_iterations);
            else if (key == "gs_candidates")
                integer(cfg.gs_candidates);
            else if (key == "gs_softmax_scale")
                num(cfg.gs_softmax_scale);
            else if (key == "gs_location_step_m")
                num(cfg.gs_location_step_m);
            else if (key == "gs_orientation_step_deg")
                num(cfg.gs_orientation_step_deg);
            else if (key == "gs_revisit_penalty_db")
                num(cfg.gs_revisit_penalty_db);
            else if (key == "sca_penalty")
                num(cfg.sca_penalty);
            else if (key == "sca_max_iterations")
                integer(cfg.sca_max_iterations);
            else if (key == "sca_objective_tol")
                num(cfg.sca_objective_tol);
            else if (key == "sdp_gap_tol")
                num(cfg.sdp_gap_tol);
            else
                handled = false;
        }
        else // run
        {
            if (key == "seed")
                cfg.seed = parse_number<std::uint64_t>(value, origin, line_no);
            else if (key == "threads")
                integer(cfg.threads);
            else
                handled = false;
        }
        if (!handled)
            fail(origin, line_no,
                 "unknown key '" + key + "' in [" + section + "]");
    }

    try
    {
        cfg.validate();
    }
    catch (const ConfigError &e)
    {
        throw ConfigError(std::string(origin) + ": " + e.what());
    }
    return cfg;
}

Config load_config(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError("cannot read config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), path);
}

std::string serialize_config(const Config &cfg)
{
    std::string out;
    out += "# airs6dma configuration\n";
    out += "[scenario]\n";
    out += "id = " + cfg.scenario_id + "\n";
    out += "altitude_m = ";
    append_number(out, cfg.altitude_m);
    out += "\n";
    for (const auto &u : cfg.users_m)
    {
        out += "user = ";
        append_tuple(out, u);
        out += "\n";
    }
    out += "region = ";
    append_tuple(out, cfg.region_m);
    out += "\n\n[radio]\n";
    const auto kv = [&out](const char *key, auto v) {
        out += key;
        out += " = ";
        append_number(out, v);
        out += "\n";
    };
    kv("wavelength_m", cfg.wavelength_m);
    kv("tx_spacing_m", cfg.tx_spacing_m);
    kv("element_spacing_m", cfg.element_spacing_m);
    kv("bs_antennas", cfg.bs_antennas);
    kv("elements_x", cfg.elements_x);
    kv("elements_y", cfg.elements_y);
    kv("ref_path_gain_db", cfg.ref_path_gain_db);
    kv("tx_power_dbm", cfg.tx_power_dbm);
    kv("noise_dbm", cfg.noise_dbm);
    out += "\n[algorithm]\n";
    kv("ao_iterations", cfg.ao_iterations);
    out += "location_coarse = ";
    append_tuple(out, cfg.location_coarse);
    out += "\nlocation_fine = ";
    append_tuple(out, cfg.location_fine);
    out += "\norientation_coarse = ";
    append_tuple(out, cfg.orientation_coarse);
    out += "\norientation_fine = ";
    append_tuple(out, cfg.orientation_fine);
    out += "\n";
    kv("gs_iterations", cfg.gs_iterations);
    kv("gs_candidates", cfg.gs_candidates);
    kv("gs_softmax_scale", cfg.gs_softmax_scale);
    kv("gs_location_step_m", cfg.gs_location_step_m);
    kv("gs_orientation_step_deg", cfg.gs_orientation_step_deg);
    kv("gs_revisit_penalty_db", cfg.gs_revisit_penalty_db);
    kv("sca_penalty", cfg.sca_penalty);
    kv("sca_max_iterations", cfg.sca_max_iterations);
    kv("sca_objective_tol", cfg.sca_objective_tol);
    kv("sdp_gap_tol", cfg.sdp_gap_tol);
    out += "\n[run]\n";
    kv("seed", cfg.seed);
    kv("threads", cfg.threads);
    return out;
}

} // namespace a6d
