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

#include "mimofe/frontend/architecture.hpp"

#include <span>

namespace mimofe::frontend {

struct WilkinsonResult
{
    cplx output;
    double dissipated = 0.0; // power absorbed by the isolation resistors
};

/// K-way matched combiner: output = sum(inputs) / sqrt(K).
/// Throws std::invalid_argument for fewer than two inputs.
WilkinsonResult wilkinson_combine(std::span<const cplx> inputs);

/// Consumed-power ledger in watts.
struct PowerBreakdown
{
    double p_radiated = 0.0;
    double p_pa_out = 0.0;
    double p_pa_dc = 0.0;
    double p_rf_chains = 0.0;
    double p_ima = 0.0;
    double p_total = 0.0;

    double efficiency() const { return p_radiated / p_total; }
};

/// Power drawn to radiate p_t watts.
///
/// The PA output covers every loss between the PAs and the aperture: none for
/// FD and HADB (PAs feed the antennas), spillover and phase-shifter loss for
/// TARA (PAs sit in the illuminators), switch and both lens stacks for RL (PAs
/// per chain ahead of the switch). HADB networks add intermediate amplifiers:
/// a static draw per IMA plus the make-up for divider excess loss, phase-shifter
/// loss and the power a Wilkinson combiner wastes at the given
/// combining_efficiency, referred to the PA drive level. The Ideal variant
/// consumes exactly p_t.
///
/// Throws std::invalid_argument for p_t <= 0 or combining_efficiency outside (0, 1].
PowerBreakdown consumed_power(const ArchitectureSpec &spec, double p_t, double combining_efficiency = 1.0);

struct ComponentCount
{
    int lines = 0;
    int phase_shifters = 0;
    int dividers = 0;
    int combiners = 0;
    int imas = 0;
    int switches = 0;

    bool operator==(const ComponentCount &) const = default;
};

ComponentCount count_components(const ArchitectureSpec &spec);

/// ceil(log2(n)) for n >= 1.
int division_stages(int n);

} // namespace mimofe::frontend
