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

#include "mimofe/aperture/geometry.hpp"
#include "mimofe/random.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mimofe::aperture {

enum class ScenarioLabel { UMaLos, UMaNlos, RMaLos, RMaNlos };

std::string_view to_string(ScenarioLabel label);
std::optional<ScenarioLabel> parse_scenario_label(std::string_view text);
inline constexpr ScenarioLabel kAllScenarios[] = {ScenarioLabel::UMaLos, ScenarioLabel::UMaNlos,
                                                  ScenarioLabel::RMaLos, ScenarioLabel::RMaNlos};

/// Angular region users are dropped in (radians).
struct Sector
{
    double azimuth_min = -kPi / 3.0;
    double azimuth_max = kPi / 3.0;
    double elevation_min = -kPi / 12.0;
    double elevation_max = kPi / 12.0;

    bool contains(const Direction &d) const
    {
        return d.azimuth >= azimuth_min && d.azimuth <= azimuth_max && d.elevation >= elevation_min &&
               d.elevation <= elevation_max;
    }
};

/// Clustered Rician stand-in for a macro-cell propagation scenario.
/// NLOS scenarios carry rician_k_db = -inf (no specular component).
struct ChannelScenario
{
    ScenarioLabel label = ScenarioLabel::UMaLos;
    double rician_k_db = 9.0;
    int cluster_count = 10;
    double azimuth_spread = deg_to_rad(10.0);
    double elevation_spread = deg_to_rad(5.0);
    Sector sector;

    static ChannelScenario preset(ScenarioLabel label);
    bool is_los() const { return rician_k_db > -std::numeric_limits<double>::infinity(); }
    // Linear K-factor; +inf for a pure specular channel.
    double rician_k() const;
};

struct ChannelRealization
{
    CMat H; // K x N_t
    std::vector<Direction> user_directions;
    ChannelScenario scenario;
    std::uint64_t seed = 0;
    std::uint64_t index = 0;
};

/// Independent uniform draws over the scenario sector.
std::vector<Direction> draw_users(const ChannelScenario &scenario, int k, Rng &rng);

/// Row k = conj( sqrt(kappa/(kappa+1)) a(dir_k)
///             + sqrt(1/(kappa+1)) / sqrt(C) * sum_c g_c a(dir_k + delta_c) ),
/// rescaled so that its expected squared norm given the drawn angles is N_t.
/// Large-scale path loss is not modelled.
ChannelRealization generate_channel(const ChannelScenario &scenario, const ArrayGeometry &geom,
                                    const ElementPattern &pattern, int k, Rng &rng);

/// Same as above with the random stream fixed by (seed, realization index).
ChannelRealization generate_channel(const ChannelScenario &scenario, const ArrayGeometry &geom,
                                    const ElementPattern &pattern, int k, std::uint64_t seed,
                                    std::uint64_t index);

} // namespace mimofe::aperture
