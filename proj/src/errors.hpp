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

#include <stdexcept>
#include <string>

namespace a6d
{

// Malformed or inconsistent configuration input. Messages carry line numbers
// when the error originates from a config file.
struct ConfigError : std::runtime_error
{
    explicit ConfigError(const std::string &msg) : std::runtime_error(msg) {}
};

// Numerical solver did not reach its target tolerance. The message carries the
// residuals at the point of failure.
struct SolverError : std::runtime_error
{
    explicit SolverError(const std::string &msg) : std::runtime_error(msg) {}
};

// A benchmark scheme was requested on a scenario it is not defined for.
struct SchemeError : std::invalid_argument
{
    explicit SchemeError(const std::string &msg) : std::invalid_argument(msg) {}
};

// The pose cannot serve any user (all effective aperture gains are zero).
struct InfeasiblePoseError : std::runtime_error
{
    explicit InfeasiblePoseError(const std::string &msg) : std::runtime_error(msg) {}
};

} // namespace a6d
