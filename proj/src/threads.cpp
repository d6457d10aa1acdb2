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

#include "threads.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>
#include <vector>

namespace a6d
{

namespace
{
std::atomic<int> g_threads{1};
}

void set_thread_count(int n)
{
    g_threads.store(std::max(1, n));
}

int thread_count()
{
    return g_threads.load();
}

std::size_t argmax_index(std::size_t count,
                         const std::function<double(std::size_t)> &score,
                         double *best_score)
{
    constexpr double kNone = -std::numeric_limits<double>::infinity();
    if (count == 0)
    {
        if (best_score != nullptr)
            *best_score = kNone;
        return 0;
    }

    struct Slot
    {
        double best = -std::numeric_limits<double>::infinity();
        std::size_t index = 0;
        bool found = false;
    };

    const std::size_t workers =
        std::min<std::size_t>(static_cast<std::size_t>(thread_count()), count);
    std::vector<Slot> slots(workers);
    const std::size_t chunk = (count + workers - 1) / workers;

    auto scan = [&](std::size_t w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(count, lo + chunk);
        Slot s;
        for (std::size_t i = lo; i < hi; ++i)
        {
            const double v = score(i);
            if (v != v)
                continue; // NaN never wins
            if (!s.found || v > s.best)
            {
                s.best = v;
                s.index = i;
                s.found = true;
            }
        }
        slots[w] = s;
    };

    if (workers == 1)
    {
        scan(0);
    }
    else
    {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back(scan, w);
        for (std::thread &t : pool)
            t.join();
    }

    Slot merged;
    for (const Slot &s : slots)
    {
        if (!s.found)
            continue;
        // Chunks are scanned in ascending index order, so a strict comparison
        // keeps the lowest index on ties for any worker count.
        if (!merged.found || s.best > merged.best)
            merged = s;
    }
    if (!merged.found)
    {
        // Every score was NaN; fall back to index 0 with -inf.
        merged.best = kNone;
        merged.index = 0;
    }
    if (best_score != nullptr)
        *best_score = merged.best;
    return merged.index;
}

} // namespace a6d
