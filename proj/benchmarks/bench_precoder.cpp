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
#include "mimofe/precoder/objective.hpp"
#include "mimofe/precoder/optimizer.hpp"

#include <benchmark/benchmark.h>

using namespace mimofe;

namespace {

aperture::ChannelRealization channel(int n_t, int k, std::uint64_t index)
{
    const int side = static_cast<int>(std::lround(std::sqrt(n_t)));
    const auto geom = aperture::build_ura(side, side, 0.5);
    return aperture::generate_channel(aperture::ChannelScenario::preset(aperture::ScenarioLabel::UMaLos), geom,
                                      aperture::ElementPattern::cosine(1.0), k, 42, index);
}

void BM_ObjectiveJ(benchmark::State &state)
{
    const int n_t = static_cast<int>(state.range(0));
    const auto spec = frontend::build_architecture(frontend::Variant::HadbFc, n_t, 4,
                                                   frontend::RfParams::preset(frontend::Band::FR1));
    const auto ch = channel(n_t, 4, 0);
    const CMat A = frontend::analog_transfer(spec, frontend::zero_state(spec));
    for (auto _ : state)
        benchmark::DoNotOptimize(precoder::objective_j(ch.H, A));
}
BENCHMARK(BM_ObjectiveJ)->Arg(16)->Arg(64)->Arg(256);

void BM_Optimize(benchmark::State &state)
{
    const auto variant = static_cast<frontend::Variant>(state.range(0));
    const auto spec = frontend::build_architecture(variant, 64, 4, frontend::RfParams::preset(frontend::Band::FR1));
    const auto ch = channel(64, 4, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(precoder::optimize_analog(spec, ch.H).objective);
    state.SetLabel(std::string(frontend::to_string(variant)));
}
BENCHMARK(BM_Optimize)
    ->Arg(static_cast<int>(frontend::Variant::HadbFc))
    ->Arg(static_cast<int>(frontend::Variant::HadbPc))
    ->Arg(static_cast<int>(frontend::Variant::TaraFi))
    ->Arg(static_cast<int>(frontend::Variant::TaraSi))
    ->Arg(static_cast<int>(frontend::Variant::Rl))
    ->Unit(benchmark::kMillisecond);

void BM_RlExhaustive(benchmark::State &state)
{
    const auto spec =
        frontend::build_architecture(frontend::Variant::Rl, 64, 4, frontend::RfParams::preset(frontend::Band::FR1));
    const auto ch = channel(64, 4, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(precoder::exhaustive_beam_search(spec, ch.H).objective);
}
BENCHMARK(BM_RlExhaustive)->Unit(benchmark::kMillisecond);

} // namespace
