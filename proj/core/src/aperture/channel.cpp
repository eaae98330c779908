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

#include "mimofe/aperture/channel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace mimofe::aperture {

namespace {
constexpr std::uint64_t kChannelStream = 0x636861ULL;
}

std::string_view to_string(ScenarioLabel label)
{
    switch (label) {
    case ScenarioLabel::UMaLos: return "UMa-LOS";
    case ScenarioLabel::UMaNlos: return "UMa-NLOS";
    case ScenarioLabel::RMaLos: return "RMa-LOS";
    case ScenarioLabel::RMaNlos: return "RMa-NLOS";
    }
    return "?";
}

std::optional<ScenarioLabel> parse_scenario_label(std::string_view text)
{
    for (auto l : kAllScenarios)
        if (to_string(l) == text)
            return l;
    return std::nullopt;
}

ChannelScenario ChannelScenario::preset(ScenarioLabel label)
{
    constexpr double no_los = -std::numeric_limits<double>::infinity();
    ChannelScenario s;
    s.label = label;
    switch (label) {
    case ScenarioLabel::UMaLos:
    case ScenarioLabel::UMaNlos:
        s.rician_k_db = label == ScenarioLabel::UMaLos ? 9.0 : no_los;
        s.cluster_count = 10;
        s.azimuth_spread = deg_to_rad(10.0);
        s.elevation_spread = deg_to_rad(5.0);
        break;
    case ScenarioLabel::RMaLos:
    case ScenarioLabel::RMaNlos:
        s.rician_k_db = label == ScenarioLabel::RMaLos ? 12.0 : no_los;
        s.cluster_count = 6;
        s.azimuth_spread = deg_to_rad(5.0);
        s.elevation_spread = deg_to_rad(2.0);
        break;
    }
    return s;
}

double ChannelScenario::rician_k() const
{
    if (rician_k_db == std::numeric_limits<double>::infinity())
        return std::numeric_limits<double>::infinity();
    if (rician_k_db == -std::numeric_limits<double>::infinity())
        return 0.0;
    return db_to_power(rician_k_db);
}

std::vector<Direction> draw_users(const ChannelScenario &scenario, int k, Rng &rng)
{
    if (k < 1)
        throw std::invalid_argument("draw_users: K must be >= 1");
    const auto &s = scenario.sector;
    std::vector<Direction> users;
    users.reserve(k);
    for (int i = 0; i < k; ++i) {
        const double az = rng.uniform(s.azimuth_min, s.azimuth_max);
        const double el = rng.uniform(s.elevation_min, s.elevation_max);
        users.push_back({az, el});
    }
    return users;
}

ChannelRealization generate_channel(const ChannelScenario &scenario, const ArrayGeometry &geom,
                                    const ElementPattern &pattern, int k, Rng &rng)
{
    if (k < 1)
        throw std::invalid_argument("generate_channel: K must be >= 1");
    if (scenario.cluster_count < 0)
        throw std::invalid_argument("generate_channel: negative cluster count");

    const int n_t = geom.size();
    const double kappa = scenario.rician_k();
    double w_los = 1.0, w_nlos = 0.0;
    if (std::isfinite(kappa)) {
        w_los = kappa / (kappa + 1.0);
        w_nlos = 1.0 / (kappa + 1.0);
    }
    if (scenario.cluster_count == 0) {
        w_los = 1.0;
        w_nlos = 0.0;
    }

    ChannelRealization out;
    out.scenario = scenario;
    out.user_directions = draw_users(scenario, k, rng);
    out.H.resize(k, n_t);

    const int c_count = scenario.cluster_count;
    for (int u = 0; u < k; ++u) {
        const auto &dir = out.user_directions[u];
        const CVec a_los = steering_vector(geom, pattern, dir);
        CVec field = std::sqrt(w_los) * a_los;
        double expected = w_los * a_los.squaredNorm();

        // Cluster draws happen even when they carry no weight so that the random
        // stream consumed per user does not depend on the K-factor.
        CVec scattered = CVec::Zero(n_t);
        double scattered_expected = 0.0;
        for (int c = 0; c < c_count; ++c) {
            const cplx g = rng.complex_normal();
            const double daz = rng.normal() * scenario.azimuth_spread;
            const double del = rng.normal() * scenario.elevation_spread;
            const Direction d{wrap_angle(dir.azimuth + daz),
                              std::clamp(dir.elevation + del, -kPi / 2.0, kPi / 2.0)};
            const CVec a_c = steering_vector(geom, pattern, d);
            scattered += g * a_c;
            scattered_expected += a_c.squaredNorm();
        }
        if (c_count > 0 && w_nlos > 0.0) {
            field += std::sqrt(w_nlos / c_count) * scattered;
            expected += w_nlos * scattered_expected / c_count;
        }

        const double scale = expected > 0.0 ? std::sqrt(n_t / expected) : 0.0;
        out.H.row(u) = (scale * field).conjugate().transpose();
    }
    return out;
}

ChannelRealization generate_channel(const ChannelScenario &scenario, const ArrayGeometry &geom,
                                    const ElementPattern &pattern, int k, std::uint64_t seed,
                                    std::uint64_t index)
{
    Rng rng(seed, index, kChannelStream);
    auto out = generate_channel(scenario, geom, pattern, k, rng);
    out.seed = seed;
    out.index = index;
    return out;
}

} // namespace mimofe::aperture
