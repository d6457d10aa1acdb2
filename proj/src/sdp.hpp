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

#include "mathfwd.hpp"

namespace a6d
{

// Small dense complex semidefinite program with a pinned unit diagonal:
//
//   maximize    delta + Tr(S W)
//   subject to  W Hermitian, W[i][i] = 1, W positive semidefinite,
//               Tr(C[l] W) >= delta  for all l.
//
// S and C[l] must be Hermitian. Solved with a logarithmic-barrier interior
// point method over the off-diagonal entries (real parameter dimension
// n(n-1) + 1). Written in-repo on purpose: the problems are tiny (n <= a few
// dozen) and this avoids an external conic-solver dependency.
struct SdpProblem
{
    CMat objective;                   // S
    std::vector<CMat> constraints;    // C[l], at least one

    void validate() const; // throws std::invalid_argument
};

struct SdpOptions
{
    double gap_tol = 1e-9;     // target duality-gap bound, relative to the objective scale
    double t0 = 1.0;           // initial barrier weight
    double mu = 10.0;          // barrier weight growth per outer stage
    int max_center_steps = 60; // Newton iterations per stage
    double newton_tol = 1e-10; // stop centering when decrement^2 / 2 falls below
};

struct SdpSolution
{
    CMat w;              // optimal Hermitian matrix, strictly feasible
    double delta = 0.0;  // optimal epigraph value
    double objective = 0.0;
    double gap_bound = 0.0; // (n + L) / t at termination, absolute (same scale as objective)
    int newton_steps = 0;
    bool reached_tol = false; // false when progress stalled before gap_tol
};

// Solves the program above. `warm` (n x n Hermitian with unit diagonal,
// positive semidefinite) seeds the interior point after smoothing towards the
// identity. Throws SolverError when the interior point cannot be initialized.
SdpSolution solve_unit_diag_sdp(const SdpProblem &p, const SdpOptions &opt,
                                const CMat *warm = nullptr);

namespace detail
{

// Real parameterization of the feasible set: one (re, im) slot per strict
// upper-triangle entry of W, ordered row-major, followed by delta.
int param_dim(int n);
Eigen::VectorXd pack(const CMat &w, double delta);
void unpack(const Eigen::VectorXd &x, int n, CMat &w, double &delta);

// Value, gradient and Hessian of the barrier
//   phi_t(x) = -t (delta + Tr(S W)) - logdet W - sum_l log(Tr(C_l W) - delta).
// Returns false when x lies outside the barrier domain (W not positive
// definite or some constraint slack is nonpositive); outputs are optional.
bool eval_barrier(const SdpProblem &p, const Eigen::VectorXd &x, double t,
                  double *value, Eigen::VectorXd *grad, Eigen::MatrixXd *hess);

} // namespace detail

} // namespace a6d
