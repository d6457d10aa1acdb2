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

namespace a6d
{

// One verification check outcome. `detail` carries the measured quantities so
// a failure is diagnosable from the report alone.
struct CheckResult
{
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

// Full release gate: ten checks covering rotation geometry, the single-user
// closed forms and their oracles, the semidefinite phase solver, loop
// monotonicity, multi-user scheme dominance, and byte-level determinism of
// the CSV commands. Every check pins its own scenario and algorithm
// parameters so the gate is self-contained; checks run single-threaded in
// order and the whole suite is deterministic.
//
// Check 8 contains a known-red clause: at the shortest sweep distance the
// fixed-attitude benchmarks sit about 3 dB below the orientation-less bound
// (a property of the cosine-product aperture model), which misses the 1.5 dB
// proximity target. The check reports the measured gaps.
std::vector<CheckResult> run_acceptance();

// "[PASS]/[FAIL] <id> <name> (<seconds>s): <detail>" lines plus a summary
// line "acceptance: <n_pass>/<n> checks passed".
std::string render_report(const std::vector<CheckResult> &checks);

bool all_passed(const std::vector<CheckResult> &checks);

} // namespace a6d
