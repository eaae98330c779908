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
#include "mimofe/aperture/radiation.hpp"

#include <benchmark/benchmark.h>

using namespace mimofe;

namespace {

void BM_Directivity(benchmark::State &state)
{
    const int side = static_cast<int>(state.range(0));
    const auto geom = aperture::build_ura(side, side, 0.5);
    const auto pattern = aperture::ElementPattern::cosine(1.0);
    const auto dir = aperture::Direction::from_degrees(10.0, 0.0);
    const CVec w = aperture::steering_vector(geom, pattern, dir);
    for (auto _ : state)
        benchmark::DoNotOptimize(aperture::directivity(geom, pattern, w, dir));
}
BENCHMARK(BM_Directivity)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_GenerateChannel(benchmark::State &state)
{
    const auto geom = aperture::build_ura(8, 8, 0.5);
    const auto scenario = aperture::ChannelScenario::preset(aperture::ScenarioLabel::UMaNlos);
    std::uint64_t i = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(
            aperture::generate_channel(scenario, geom, aperture::ElementPattern::cosine(1.0), 4, 42, i++).H);
}
BENCHMARK(BM_GenerateChannel);

} // namespace
