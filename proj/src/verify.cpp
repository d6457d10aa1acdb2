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

#include "verify.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <iomanip>
#include <limits>
#include <sstream>
#include <vector>

#include "beamforming.hpp"
#include "channel.hpp"
#include "config.hpp"
#include "driver.hpp"
#include "geometry.hpp"
#include "results.hpp"
#include "rng.hpp"
#include "single_user.hpp"
#include "sweeps.hpp"

namespace a6d
{
namespace
{

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0)
{
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

double db10(double linear) { return 10.0 * std::log10(linear); }

std::string fmt(double v, int digits = 4)
{
    std::ostringstream os;
    os << std::setprecision(digits) << v;
    return os.str();
}

double uniform_in(std::mt19937_64 &rng, double lo, double hi)
{
    return lo + (hi - lo) * uniform01(rng);
}

CVec random_unit_modulus(std::mt19937_64 &rng, int n, bool pin_first)
{
    CVec v(n);
    for (int i = 0; i < n; ++i)
    {
        const double phase = uniform_in(rng, 0.0, 2.0 * pi);
        v[i] = std::polar(1.0, phase);
    }
    if (pin_first)
        v[0] = 1.0;
    return v;
}

// The multicast settings shared by checks 7 and 9: the full default
// exploration budget with grids reduced for the single-core time budget, and
// solver tolerances loosened one decade (the dominance margins are ~0.5 dB,
// two orders above the solver noise floor).
DriverOptions multicast_options()
{
    DriverOptions opt;
    opt.ao_iterations = 3;
    opt.location.coarse = {50, 50};
    opt.location.fine = {50, 50};
    opt.orientation.coarse = {20, 20, 20};
    opt.orientation.fine = {3, 3, 3};
    opt.gs.iterations = 400;
    opt.gs.candidates = 30;
    opt.sca.objective_tol = 1e-4;
    opt.sca.sdp.gap_tol = 1e-8;
    return opt;
}

Scenario sparse_scenario()
{
    Scenario sc;
    sc.id = "sparse";
    sc.users = {Vec3(330.0, 240.0, 0.0), Vec3(650.0, 130.0, 0.0),
                Vec3(440.0, 15.0, 0.0)};
    return sc;
}

Scenario dense_scenario()
{
    Scenario sc;
    sc.id = "dense";
    sc.users = {Vec3(655.0, 130.0, 0.0), Vec3(650.0, 135.0, 0.0),
                Vec3(650.0, 130.0, 0.0)};
    return sc;
}

CheckResult check_rotation_geometry()
{
    const auto t0 = clock_type::now();
    std::mt19937_64 rng(101);
    double worst_ortho = 0.0, worst_det = 0.0, worst_sum = 0.0;
    for (int trial = 0; trial < 1000; ++trial)
    {
        const EulerAngles a{uniform_in(rng, -pi / 2, pi / 2),
                            uniform_in(rng, -pi / 2, pi / 2),
                            uniform_in(rng, -pi / 2, pi / 2)};
        const Mat3 q = rotation_matrix(a);
        worst_ortho = std::max(
            worst_ortho,
            (q.transpose() * q - Mat3::Identity()).cwiseAbs().maxCoeff());
        worst_det = std::max(worst_det, std::abs(q.determinant() - 1.0));
        const DirectionCosines n = surface_normal(a);
        worst_sum = std::max(worst_sum, n.l1 * n.l1 + n.l3 * n.l3);
    }
    CheckResult r;
    r.id = 1;
    r.name = "rotation-matrix properties";
    r.pass = worst_ortho <= 1e-12 && worst_det <= 1e-12 &&
             worst_sum <= 1.0 + 1e-15;
    r.detail = "1000 trials: max orthogonality error " + fmt(worst_ortho, 3) +
               ", max det error " + fmt(worst_det, 3) +
               ", max l1^2+l3^2 = " + fmt(worst_sum, 17);
    r.seconds = seconds_since(t0);
    return r;
}

CheckResult check_orientation_reduction()
{
    const auto t0 = clock_type::now();
    std::mt19937_64 rng(202);
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial)
    {
        const double d = uniform_in(rng, 100.0, 1000.0);
        const double h = uniform_in(rng, 50.0, 300.0);
        const SingleUserCase c = SingleUserCase::standard(d, h, SystemParams{});
        const Scenario sc = c.to_scenario();
        const double qx = uniform_in(rng, c.qx_min, c.qx_max);
        Pose full;
        full.position = Vec3(qx, 0.0, h);
        full.angles = EulerAngles{uniform_in(rng, -pi / 2, pi / 2),
                                  uniform_in(rng, -pi / 2, pi / 2),
                                  uniform_in(rng, -pi / 2, pi / 2)};
        Pose reduced = full;
        reduced.angles = reduce_orientation(full.angles);
        const double f_full = effective_aperture_gain(sc, full, 0);
        const double f_reduced = effective_aperture_gain(sc, reduced, 0);
        worst = std::max(worst, std::abs(f_full - f_reduced));
    }
    CheckResult r;
    r.id = 2;
    r.name = "orientation reduction preserves aperture gain";
    r.pass = worst <= 1e-9;
    r.detail = "1000 random poses: max |F(full) - F(reduced)| = " + fmt(worst, 3);
    r.seconds = seconds_since(t0);
    return r;
}

CheckResult check_optimal_pitch()
{
    const auto t0 = clock_type::now();
    std::mt19937_64 rng(303);
    double worst_grid = 0.0;   // best grid SNR relative to the closed form
    double worst_plane = 0.0;  // best 2-angle aperture relative to pitch-only
    double worst_mid = 0.0;    // |optimal_pitch(D/2)|
    double worst_anti = 0.0;   // antisymmetry defect
    double worst_snr_sym = 0.0;
    for (int trial = 0; trial < 200; ++trial)
    {
        const double d = uniform_in(rng, 100.0, 1000.0);
        const double h = uniform_in(rng, 30.0, 300.0);
        const SingleUserCase c = SingleUserCase::standard(d, h, SystemParams{});
        const Scenario sc = c.to_scenario();
        const double qx = uniform_in(rng, c.qx_min, c.qx_max);

        const double best = snr_pitch_optimal(qx, c);
        for (int k = 0; k < 10000; ++k)
        {
            const double psi = -pi / 2 + pi * double(k) / 9999.0;
            worst_grid = std::max(worst_grid, snr_1d(qx, psi, c) / best - 1.0);
        }

        Pose pitch_only;
        pitch_only.position = Vec3(qx, 0.0, h);
        pitch_only.angles = EulerAngles{0.0, optimal_pitch(qx, c), 0.0};
        const double f_star = effective_aperture_gain(sc, pitch_only, 0);
        for (int ky = 0; ky < 21; ++ky)
        {
            for (int kx = 0; kx < 21; ++kx)
            {
                Pose plane = pitch_only;
                plane.angles = EulerAngles{0.0, -pi / 2 + pi * ky / 20.0,
                                           -pi / 2 + pi * kx / 20.0};
                const double f = effective_aperture_gain(sc, plane, 0);
                if (f_star > 0.0)
                    worst_plane = std::max(worst_plane, f / f_star - 1.0);
            }
        }

        worst_mid = std::max(worst_mid, std::abs(optimal_pitch(d / 2.0, c)));
        const double off = uniform_in(rng, 0.0, 0.7 * d);
        const double lo_pitch = optimal_pitch(d / 2.0 - off, c);
        const double hi_pitch = optimal_pitch(d / 2.0 + off, c);
        worst_anti = std::max(worst_anti, std::abs(lo_pitch + hi_pitch));
        const double lo_snr = snr_pitch_optimal(d / 2.0 - off, c);
        const double hi_snr = snr_pitch_optimal(d / 2.0 + off, c);
        worst_snr_sym = std::max(
            worst_snr_sym, std::abs(lo_snr - hi_snr) / std::max(lo_snr, hi_snr));
    }
    CheckResult r;
    r.id = 3;
    r.name = "closed-form pitch dominates grid and plane searches";
    r.pass = worst_grid <= 1e-9 && worst_plane <= 1e-9 && worst_mid == 0.0 &&
             worst_anti <= 1e-12 && worst_snr_sym <= 1e-12;
    r.detail = "200 cases: grid excess " + fmt(worst_grid, 3) +
               ", plane excess " + fmt(worst_plane, 3) + ", midpoint pitch " +
               fmt(worst_mid, 3) + ", antisymmetry defect " + fmt(worst_anti, 3) +
               ", mirrored-SNR defect " + fmt(worst_snr_sym, 3);
    r.seconds = seconds_since(t0);
    return r;
}

CheckResult check_placement_roots()
{
    const auto t0 = clock_type::now();
    std::mt19937_64 rng(404);
    double worst = 0.0; // |grid argmin - nearest root| in grid steps
    for (int trial = 0; trial < 50; ++trial)
    {
        const double d = uniform_in(rng, 50.0, 1200.0);
        const double h = uniform_in(rng, 20.0, 400.0);
        const double lo = -0.2 * d, hi = 1.2 * d;
        const int n = 100000;
        const double step = (hi - lo) / double(n - 1);
        double best_q = lo, best_v = std::numeric_limits<double>::infinity();
        for (int k = 0; k < n; ++k)
        {
            const double qx = lo + step * double(k);
            const double v =
                (qx * qx + h * h) * ((qx - d) * (qx - d) + h * h);
            if (v < best_v)
            {
                best_v = v;
                best_q = qx;
            }
        }
        double nearest = std::numeric_limits<double>::infinity();
        for (double root : iso_optimal_qx(d, h))
            nearest = std::min(nearest, std::abs(best_q - root));
        worst = std::max(worst, nearest / step);
    }
    CheckResult r;
    r.id = 4;
    r.name = "closed-form placement roots match brute-force minimization";
    r.pass = worst <= 1.0;
    r.detail = "50 cases, 1e5-point grids: max |grid - root| = " + fmt(worst, 3) +
               " steps";
    r.seconds = seconds_since(t0);
    return r;
}

CheckResult check_beamforming_bound()
{
    const auto t0 = clock_type::now();
    const SystemParams p{};
    const double n2 =
        double(p.element_count()) * double(p.element_count()); // 256^2
    std::mt19937_64 rng(505);
    const SingleUserCase c = SingleUserCase::standard(500.0, 100.0, p);
    const Scenario sc = c.to_scenario();

    double worst_random = 0.0, inphase_defect = 1.0;
    AxisResponse f{};
    for (int trial = 0; trial < 10000; ++trial)
    {
        if (trial % 100 == 0)
        {
            Pose pose;
            pose.position =
                Vec3(uniform_in(rng, c.qx_min, c.qx_max), 0.0, c.altitude);
            pose.angles = EulerAngles{uniform_in(rng, -pi / 2, pi / 2),
                                      uniform_in(rng, -pi / 2, pi / 2),
                                      uniform_in(rng, -pi / 2, pi / 2)};
            f = composite_response(link_angles(sc, pose), 0, p);
        }
        PhaseProfile t;
        t.x = random_unit_modulus(rng, p.elements_x, false);
        t.y = random_unit_modulus(rng, p.elements_y, false);
        worst_random = std::max(worst_random, beamforming_gain(f, t) / n2);
    }
    {
        Pose pose;
        pose.position = Vec3(150.0, 0.0, c.altitude);
        pose.angles = EulerAngles{0.0, optimal_pitch(150.0, c), 0.0};
        const LinkAngles link = link_angles(sc, pose);
        const AxisResponse fr = composite_response(link, 0, p);
        const PhaseProfile matched = inphase_profile(link, 0, p);
        inphase_defect = std::abs(beamforming_gain(fr, matched) / n2 - 1.0);
    }
    const double db_figure = db10(n2);

    CheckResult r;
    r.id = 5;
    r.name = "beamforming gain bounded by squared element count";
    r.pass = worst_random <= 1.0 + 1e-12 && inphase_defect <= 1e-9 &&
             std::abs(db_figure - 48.2) <= 0.05;
    r.detail = "1e4 random profiles: max gain/N^2 = " + fmt(worst_random, 6) +
               "; in-phase defect " + fmt(inphase_defect, 3) + "; 10log10(N^2) = " +
               fmt(db_figure, 4) + " dB";
    r.seconds = seconds_since(t0);
    return r;
}

CheckResult check_sca_solver()
{
    const auto t0 = clock_type::now();
    const ScaOptions opt{};
    std::mt19937_64 rng(606);

    // (a) single response: the relaxation must recover the aligned optimum.
    const SystemParams p{};
    const SingleUserCase c = SingleUserCase::standard(500.0, 100.0, p);
    const Scenario sc = c.to_scenario();
    Pose pose;
    pose.position = Vec3(150.0, 0.0, c.altitude);
    pose.angles = EulerAngles{0.0, optimal_pitch(150.0, c), 0.0};
    const AxisResponse fr = composite_response(link_angles(sc, pose), 0, p);
    const AxisScaResult single =
        sca_axis({fr.x}, {1.0}, opt); // 16 elements, one user
    const double single_ratio =
        single.achieved / (double(p.elements_x) * double(p.elements_x));

    // (b) 4-element two-user instances vs the 16-level exhaustive optimum,
    // and (c) relaxation certificates on the same instances.
    double worst_ratio = std::numeric_limits<double>::infinity();
    double worst_eig = 0.0, worst_diag = 0.0, worst_residual = 0.0;
    const auto certify = [&](const AxisScaResult &res, int n) {
        Eigen::SelfAdjointEigenSolver<CMat> eig(res.w);
        const double lam_min = eig.eigenvalues().minCoeff();
        const double lam_max = eig.eigenvalues().maxCoeff();
        worst_eig = std::max(worst_eig, -lam_min);
        for (int i = 0; i < n; ++i)
            worst_diag =
                std::max(worst_diag, std::abs(res.w(i, i).real() - 1.0));
        worst_residual = std::max(worst_residual, (double(n) - lam_max) / n);
    };
    certify(single, p.elements_x);
    // Instances are drawn from the solver's domain: per-user geometric
    // unit-modulus responses (random axis spatial frequency, the form every
    // composite_response takes) with random positive weights.
    const auto geometric = [](double freq, int n) {
        CVec v(n);
        for (int k = 0; k < n; ++k)
            v[k] = std::polar(1.0, freq * double(k));
        return v;
    };
    for (int inst = 0; inst < 20; ++inst)
    {
        const double k0 = uniform_in(rng, 0.0, 2.0 * pi);
        const double k1 = uniform_in(rng, 0.0, 2.0 * pi);
        const std::vector<CVec> responses = {geometric(k0, 4), geometric(k1, 4)};
        const std::vector<double> weights = {uniform_in(rng, 0.5, 1.5),
                                             uniform_in(rng, 0.5, 1.5)};
        const AxisScaResult res = sca_axis(responses, weights, opt);
        certify(res, 4);

        double quantized_best = 0.0;
        for (int code = 0; code < 65536; ++code)
        {
            std::complex<double> acc[2] = {};
            int q = code;
            for (int e = 0; e < 4; ++e)
            {
                const double phase = 2.0 * pi * double(q % 16) / 16.0;
                q /= 16;
                const std::complex<double> t = std::polar(1.0, phase);
                acc[0] += std::conj(responses[0][e]) * t;
                acc[1] += std::conj(responses[1][e]) * t;
            }
            quantized_best = std::max(quantized_best,
                                      std::min(weights[0] * std::norm(acc[0]),
                                               weights[1] * std::norm(acc[1])));
        }
        worst_ratio = std::min(worst_ratio, res.achieved / quantized_best);
    }

    CheckResult r;
    r.id = 6;
    r.name = "semidefinite phase solver quality and certificates";
    r.pass = single_ratio >= 0.99 && worst_ratio >= 0.85 && worst_eig <= 1e-8 &&
             worst_diag <= 1e-8 && worst_residual <= 1e-4;
    r.detail = "single-user ratio " + fmt(single_ratio, 6) +
               "; worst quantized-optimum ratio " + fmt(worst_ratio, 4) +
               "; min eigenvalue " + fmt(-worst_eig, 3) + "; diag defect " +
               fmt(worst_diag, 3) + "; rank residual/n " + fmt(worst_residual, 3);
    r.seconds = seconds_since(t0);
    return r;
}

CheckResult check_loop_monotonicity()
{
    const auto t0 = clock_type::now();
    Scenario sc = sparse_scenario();
    DriverOptions opt = multicast_options();
    opt.location.coarse = {30, 30};
    opt.location.fine = {10, 10};
    opt.gs.iterations = 100;
    opt.seed = 1;

    const Solution sol = run_scheme(sc, Scheme::ao_with_gs, opt);
    bool monotone = !sol.trace.empty();
    for (std::size_t i = 1; i < sol.trace.size(); ++i)
        monotone = monotone && sol.trace[i].snr >= sol.trace[i - 1].snr;
    monotone = monotone && sol.snr == sol.trace.back().snr;

    CheckResult r;
    r.id = 7;
    r.name = "alternating loop trace is non-decreasing";
    r.pass = monotone;
    r.detail = std::to_string(sol.trace.size()) + " stage points, " +
               fmt(sol.trace.front().snr_db(), 4) + " dB -> " +
               fmt(sol.snr_db(), 4) + " dB";
    r.seconds = seconds_since(t0);
    return r;
}

CheckResult check_scheme_ordering()
{
    const auto t0 = clock_type::now();
    const SystemParams p{};
    bool ordering_ok = true;
    bool small_d_ok = true;
    std::ostringstream detail;
    detail << std::setprecision(4);
    for (double d : {200.0, 400.0, 600.0, 800.0, 1000.0})
    {
        const SingleUserCase c = SingleUserCase::standard(d, 100.0, p);
        const double iso = db10(isotropic_bound(c).snr);
        const double joint = db10(solve_joint(c).snr);
        const double ori = db10(orientation_only(c).snr);
        const double loc = db10(location_only(c).snr);
        ordering_ok = ordering_ok && iso >= joint - 0.05 && joint >= ori - 0.05 &&
                      ori >= loc - 0.05;
        detail << "D=" << d << ": " << iso << "/" << joint << "/" << ori << "/"
               << loc << " dB; ";
        if (d == 200.0)
        {
            const double worst_gap =
                iso - std::min(joint, std::min(ori, loc));
            small_d_ok = worst_gap <= 1.5;
            detail << "smallest-D gap to bound " << worst_gap
                   << " dB (target 1.5); ";
        }
    }
    CheckResult r;
    r.id = 8;
    r.name = "single-user scheme ordering and small-distance proximity";
    r.pass = ordering_ok && small_d_ok;
    r.detail = std::string(ordering_ok ? "ordering ok" : "ordering violated") +
               "; " + detail.str();
    r.seconds = seconds_since(t0);
    return r;
}

CheckResult check_multicast_dominance()
{
    const auto t0 = clock_type::now();
    DriverOptions opt = multicast_options();
    bool ok = true;
    std::ostringstream detail;
    detail << std::setprecision(4);

    // Reference for the dense clause: the co-located users sit ~663 m out, so
    // the multicast optimum should approach the single-user joint optimum.
    const SingleUserCase ref_case =
        SingleUserCase::standard(663.0, 100.0, SystemParams{});
    const double ref_db = db10(solve_joint(ref_case).snr);
    double worst_dense_gap = 0.0;

    for (const Scenario &base : {sparse_scenario(), dense_scenario()})
    {
        for (double h : {100.0, 200.0})
        {
            Scenario sc = base;
            sc.altitude = h;
            // The three benchmarks draw nothing from the seed stream, so one
            // run each serves all seed comparisons.
            const Solution nogs = run_scheme(sc, Scheme::ao_no_gs, opt);
            const Solution indiv =
                run_scheme(sc, Scheme::individual_optimization, opt);
            const Solution noori = run_scheme(sc, Scheme::no_orientation, opt);
            detail << base.id << " H=" << h << ": benchmarks "
                   << nogs.snr_db() << "/" << indiv.snr_db() << "/"
                   << noori.snr_db() << " dB, gs";
            for (std::uint64_t seed : {1ull, 2ull, 3ull})
            {
                opt.seed = seed;
                const Solution gs = run_scheme(sc, Scheme::ao_with_gs, opt);
                const bool dominated = gs.snr >= nogs.snr &&
                                       gs.snr >= indiv.snr &&
                                       gs.snr >= noori.snr;
                ok = ok && dominated;
                detail << " " << gs.snr_db();
                if (!dominated)
                    detail << "(!)";
                if (base.id == "dense" && h == 100.0)
                    worst_dense_gap = std::max(
                        worst_dense_gap, std::abs(ref_db - gs.snr_db()));
            }
            detail << " dB; ";
        }
    }
    ok = ok && worst_dense_gap <= 0.5;
    detail << "dense gap to joint optimum at 663 m: " << worst_dense_gap
           << " dB (target 0.5)";

    CheckResult r;
    r.id = 9;
    r.name = "exploration-augmented loop dominates benchmarks";
    r.pass = ok;
    r.detail = detail.str();
    r.seconds = seconds_since(t0);
    return r;
}

CheckResult check_determinism()
{
    const auto t0 = clock_type::now();

    Config cfg; // sparse defaults
    cfg.location_coarse = {24, 12};
    cfg.location_fine = {5, 5};
    cfg.orientation_coarse = {10, 10, 10};
    cfg.gs_iterations = 15;
    cfg.gs_candidates = 12;
    cfg.sca_objective_tol = 1e-3;
    cfg.sdp_gap_tol = 1e-7;

    const std::vector<double> d_list = {300.0, 500.0};
    const std::string sweep_a = result_csv(single_sweep_d(cfg, d_list).rows);
    const std::string sweep_b = result_csv(single_sweep_d(cfg, d_list).rows);

    const SweepOutcome multi_a = multi_optimize(cfg, {100.0}, true, 12, 8);
    const SweepOutcome multi_b = multi_optimize(cfg, {100.0}, true, 12, 8);
    const bool rows_equal =
        result_csv(multi_a.rows) == result_csv(multi_b.rows);
    const bool maps_equal =
        field_map_csv(multi_a.maps) == field_map_csv(multi_b.maps);

    const Config round = parse_config(serialize_config(cfg));
    const bool config_roundtrip = round == cfg;

    CheckResult r;
    r.id = 10;
    r.name = "reruns emit byte-identical CSV";
    r.pass = sweep_a == sweep_b && rows_equal && maps_equal && config_roundtrip;
    r.detail = std::string("distance sweep ") +
               (sweep_a == sweep_b ? "identical" : "DIFFERS") +
               "; optimization rows " + (rows_equal ? "identical" : "DIFFERS") +
               "; field maps " + (maps_equal ? "identical" : "DIFFERS") +
               "; config round-trip " + (config_roundtrip ? "exact" : "DIFFERS");
    r.seconds = seconds_since(t0);
    return r;
}

} // namespace

std::vector<CheckResult> run_acceptance()
{
    std::vector<CheckResult> checks;
    checks.push_back(check_rotation_geometry());
    checks.push_back(check_orientation_reduction());
    checks.push_back(check_optimal_pitch());
    checks.push_back(check_placement_roots());
    checks.push_back(check_beamforming_bound());
    checks.push_back(check_sca_solver());
    checks.push_back(check_loop_monotonicity());
    checks.push_back(check_scheme_ordering());
    checks.push_back(check_multicast_dominance());
    checks.push_back(check_determinism());
    return checks;
}

std::string render_report(const std::vector<CheckResult> &checks)
{
    std::ostringstream os;
    int passed = 0;
    for (const CheckResult &c : checks)
    {
        passed += c.pass ? 1 : 0;
        os << (c.pass ? "[PASS] " : "[FAIL] ") << c.id << " " << c.name << " ("
           << std::fixed << std::setprecision(1) << c.seconds << "s): "
           << c.detail << "\n";
        os.unsetf(std::ios_base::floatfield);
    }
    os << "acceptance: " << passed << "/" << checks.size() << " checks passed\n";
    return os.str();
}

bool all_passed(const std::vector<CheckResult> &checks)
{
    for (const CheckResult &c : checks)
        if (!c.pass)
            return false;
    return !checks.empty();
}

} // namespace a6d
