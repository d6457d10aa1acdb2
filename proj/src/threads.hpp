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

#include <cstddef>
#include <functional>

namespace a6d
{

// Worker count for grid evaluations. Defaults to 1; values below 1 clamp to 1.
void set_thread_count(int n);
int thread_count();

// Argmax of score(i) over [0, count). The scorer must be a pure function of
// the index. Highest score wins; exact ties resolve to the lowest index, and
// the result is identical for every thread count. NaN scores never win.
// Returns count when count == 0.
std::size_t argmax_index(std::size_t count,
                         const std::function<double(std::size_t)> &score,
                         double *best_score = nullptr);

} // namespace a6d
