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

#include <cstdint>
#include <vector>

namespace mimofe::precoder {

using frontend::AnalogState;
using frontend::ArchitectureSpec;

struct OptimizerConfig
{
    int max_iters = 30;   // full coordinate sweeps
    double tol = 1e-6;    // relative J improvement per sweep
    int restarts = 3;
    std::uint64_t seed = 1;
    long long rl_exhaustive_limit = 20000;
    double restart_perturbation = 0.5;

    bool operator==(const OptimizerConfig &) const = default;
};

struct AnalogOptimum
{
    AnalogState state;
    double objective = 0.0;
    std::vector<double> trace; // J after every accepted move, starting with the initial value
    int sweeps = 0;
};

// Deterministic starting point (quantized ZF phases, dominant-user co-phasing or greedy beams).
AnalogState initial_state(const ArchitectureSpec &spec, const CMat &H);

// Cyclic coordinate descent on J from a given state.
AnalogOptimum descend(const ArchitectureSpec &spec, const CMat &H, const AnalogState &start,
                      const OptimizerConfig &config = {});

// Initialization, descent and perturbed restarts; the best state found is returned.
AnalogOptimum optimize_analog(const ArchitectureSpec &spec, const CMat &H, const OptimizerConfig &config = {});

// Exhaustive beam-subset search for RL (ascending beam indices).
AnalogOptimum exhaustive_beam_search(const ArchitectureSpec &spec, const CMat &H);

// Greedy beam selection on a regularized J followed by swap descent.
AnalogOptimum greedy_beam_search(const ArchitectureSpec &spec, const CMat &H, const OptimizerConfig &config = {});

long long binomial(int n, int k);

} // namespace mimofe::precoder
