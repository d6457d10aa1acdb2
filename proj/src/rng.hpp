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

#include <cstdint>
#include <random>
#include <stdexcept>

namespace a6d
{

// Uniform draw in (0, 1]. Zero is excluded so inverse-CDF selection always
// lands on a candidate with positive probability. std::uniform_real_distribution
// is avoided because its output is not pinned across library implementations.
inline double uniform01(std::mt19937_64 &rng)
{
    return double((rng() >> 11) + 1) * 0x1.0p-53;
}

// Unbiased integer in [0, n) via rejection of the short final block.
inline std::uint64_t uniform_below(std::mt19937_64 &rng, std::uint64_t n)
{
    if (n == 0)
        throw std::invalid_argument("uniform_below: empty range");
    const std::uint64_t threshold = (0 - n) % n; // 2^64 mod n
    for (;;)
    {
        const std::uint64_t x = rng();
        if (x >= threshold)
            return x % n;
    }
}

} // namespace a6d
