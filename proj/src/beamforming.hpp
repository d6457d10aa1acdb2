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

#include <vector>

#include "channel.hpp"
#include "sdp.hpp"

namespace a6d
{

// Per-user combining weights sqrt((F_l / r2_l^2) / sum_k (F_k / r2_k^2)),
// where F_l is the effective aperture gain and r2_l the surface-user range.
// The weights absorb every per-user SNR factor the phase profile cannot
// change. Throws InfeasiblePoseError when no user has a positive gain.
std::vector<double> user_weights(const Scenario &sc, const Pose &pose);

// Autocorrelation vector of a Hermitian matrix: r[0] = n (unit diagonal
// assumed), r[d] = 2 sum_k W(k + d, k) for d >= 1.
CVec autocorrelation(const CMat &w);

// Hermitian Toeplitz matrix T with Tr(T W) = Re(f^H autocorrelation(W)) for
// every unit-diagonal Hermitian W. For a geometric unit-modulus f this equals
// the beamforming quadratic form f^H W f.
CMat autocorrelation_functional(const CVec &f);

struct ScaOptions
{
    double penalty = 10.0;       // rank-one penalty weight
    int max_iterations = 50;     // convex rounds
    double objective_tol = 1e-5; // stop when the penalized objective stalls
    SdpOptions sdp;
};

struct AxisScaResult
{
    CVec phases;            // unit modulus, first entry exactly 1
    double objective = 0.0; // delta - penalty * (n - lambda_max) at the end
    double delta = 0.0;
    double achieved = 0.0;  // min_l weight_l |f_l^H phases|^2 after extraction
    int iterations = 0;
    double gap_bound = 0.0; // duality-gap bound of the final convex round
    CMat w;                 // final relaxation matrix
};

// Max-min phase design along one surface axis: maximize
// min_l weight_l |f_l^H theta|^2 over unit-modulus theta via a penalized
// semidefinite relaxation, repeated with a linearized rank-one penalty until
// the objective stalls. The extracted profile is the phase vector of the top
// eigenvector, rotated so the first entry is 1. Each response must be a
// geometric unit-modulus sequence f[k] = exp(i k kappa_l) (the form
// composite_response produces); the Toeplitz functional identity underlying
// the relaxation holds only for that class.
AxisScaResult sca_axis(const std::vector<CVec> &responses,
                       const std::vector<double> &weights, const ScaOptions &opt);

// Solves both axes with the given per-user weights; no SNR guard.
PhaseProfile solve_profile(const Scenario &sc, const Pose &pose,
                           const ScaOptions &opt, const std::vector<double> &weights);

// Full profile update for a pose: weights from user_weights, one solve per
// axis, then each axis replacement is kept only if it does not reduce the
// multicast (minimum user) SNR relative to `previous`. Without `previous`
// the fresh profile is returned unguarded.
PhaseProfile optimize_phases(const Scenario &sc, const Pose &pose,
                             const ScaOptions &opt,
                             const PhaseProfile *previous = nullptr);

} // namespace a6d
