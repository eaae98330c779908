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

#include "mimofe/aperture/channel.hpp"
#include "mimofe/bench/toml.hpp"
#include "mimofe/frontend/architecture.hpp"
#include "mimofe/precoder/optimizer.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mimofe::bench {

enum class Experiment { SysLoss, SteerEff, Power, Components };

std::string_view to_string(Experiment e);

struct SystemParams
{
    int n_t = 64;
    int n_rf = 4;
    double p_t = 20.0;
    int phase_bits = 2;
    double evm_target = 0.0;

    bool operator==(const SystemParams &) const = default;
};

struct SweepParams
{
    std::vector<double> p_t_grid{0.1, 0.2, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0, 50.0, 100.0};
    std::vector<int> n_t_grid{16, 64, 256};
    std::vector<frontend::Band> bands{frontend::Band::FR1, frontend::Band::FR2};
    double azimuth_deg = 10.0;
    double elevation_deg = 0.0;
    bool sector_average = false;

    bool operator==(const SweepParams &) const = default;
};

struct RunConfig
{
    Experiment experiment = Experiment::SysLoss;
    std::vector<frontend::Variant> architectures{std::begin(frontend::kCompared), std::end(frontend::kCompared)};
    std::vector<aperture::ScenarioLabel> scenarios{std::begin(aperture::kAllScenarios),
                                                   std::end(aperture::kAllScenarios)};
    frontend::Band band = frontend::Band::FR1;
    int n_realizations = 200;
    std::uint64_t seed = 42;
    std::string output = "results";
    int threads = 1;

    SystemParams system;
    frontend::RfParams rf_fr1 = frontend::RfParams::preset(frontend::Band::FR1);
    frontend::RfParams rf_fr2 = frontend::RfParams::preset(frontend::Band::FR2);
    frontend::DesignParams design;
    SweepParams sweep;
    precoder::OptimizerConfig optimizer;

    // Loss preset of the band with the system-level phase resolution applied.
    frontend::RfParams rf(frontend::Band b) const;

    bool operator==(const RunConfig &) const = default;
};

/// Resolves a config text against the defaults. Unknown tables or keys, type
/// mismatches, unresolved labels and invariant violations throw ConfigError
/// with the line they were found on.
RunConfig parse_config(std::string_view text);

/// The effective config as a complete config file; parse_config of the result
/// reproduces the same RunConfig.
std::string echo_config(const RunConfig &config);

/// Shortest decimal text that reads back to the same double.
std::string format_double(double v);

} // namespace mimofe::bench
