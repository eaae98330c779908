// SPDX-License-Identifier: Apache-2.0
//
// mimofe - massive MIMO front-end architecture comparison
// Copyright (C) 2026 The mimofe authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------


#pragma once

#include "mimofe/bench/config.hpp"
#include "mimofe/metrics/metrics.hpp"

#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mimofe::bench {

enum ExitCode : int { kExitOk = 0, kExitConfigError = 2, kExitExperimentError = 3 };

/// Largest tolerated share of excluded (infeasible) realizations.
inline constexpr double kMaxExclusionRate = 0.2;

struct ExperimentResult
{
    std::vector<metrics::MetricRecord> records; // sorted with metrics::record_less
    std::vector<std::string> problems;          // non-empty makes the run fail
};

/// Runs the configured experiment in memory.
/// Throws ConfigError when the config cannot be turned into architectures.
ExperimentResult execute(const RunConfig &config);

/// Runs the experiment and writes <output>/<experiment>.csv together with the
/// effective config <output>/<experiment>.toml. Returns an ExitCode.
int run(const RunConfig &config, std::ostream &log);

} // namespace mimofe::bench
