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

#include "scenario.hpp"

#include <cmath>
#include <stdexcept>

namespace a6d
{

void SystemParams::validate() const
{
    if (!(wavelength > 0.0))
        throw std::invalid_argument("SystemParams: wavelength must be positive");
    if (!(tx_spacing > 0.0) || !(element_spacing > 0.0))
        throw std::invalid_argument("SystemParams: antenna/element spacing must be positive");
    if (bs_antennas < 1)
        throw std::invalid_argument("SystemParams: bs_antennas must be at least 1");
    if (elements_x < 1 || elements_y < 1)
        throw std::invalid_argument("SystemParams: element counts must be at least 1");
    if (!(ref_path_gain > 0.0))
        throw std::invalid_argument("SystemParams: ref_path_gain must be positive");
    if (!(tx_power > 0.0))
        throw std::invalid_argument("SystemParams: tx_power must be positive");
    if (!(noise_power > 0.0))
        throw std::invalid_argument("SystemParams: noise_power must be positive");
}

void Region::validate() const
{
    if (!(x_min <= x_max) || !(y_min <= y_max))
        throw std::invalid_argument("Region: bounds must satisfy min <= max");
    if (!std::isfinite(x_min) || !std::isfinite(x_max) || !std::isfinite(y_min) ||
        !std::isfinite(y_max))
        throw std::invalid_argument("Region: bounds must be finite");
}

void Scenario::validate() const
{
    params.validate();
    region.validate();
    if (users.empty())
        throw std::invalid_argument("Scenario: at least one user is required");
    if (!(altitude > 0.0))
        throw std::invalid_argument("Scenario: altitude must be positive");
    if (bs.z() != 0.0)
        throw std::invalid_argument("Scenario: base station must be at ground level");
    for (const Vec3 &w : users)
        if (w.z() != 0.0)
            throw std::invalid_argument("Scenario: users must be at ground level");
}

} // namespace a6d
