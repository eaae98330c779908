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

#include "mimofe/precoder/optimizer.hpp"

namespace mimofe::precoder {

struct PrecoderSolution
{
    AnalogState state;
    CMat A;                     // analog transfer of the chosen state
    CMat B;                     // digital precoder, K x K (N_t x K for FD)
    double g_squared = 0.0;     // useful per-user gain power
    double evm = 0.0;
    double combining_efficiency = 1.0;
    double objective = 0.0;     // p_t / g_squared
    bool feasible = false;
    double rx_useful = 0.0;     // K g^2
    double rx_total = 0.0;      // ||H A B||_F^2, includes residual interference
    double lambda = 0.0;        // regularization used on the EVM path
};

// Analog optimization followed by the digital stage.
PrecoderSolution solve(const ArchitectureSpec &spec, const CMat &H, double p_t, double evm_target = 0.0,
                       const OptimizerConfig &config = {});

// Digital stage for a fixed analog state.
PrecoderSolution solve_digital(const ArchitectureSpec &spec, const CMat &H, const AnalogState &state, double p_t,
                               double evm_target = 0.0);

// Expected Wilkinson output over input power at the FC combiners for unit-power symbols.
double combining_efficiency(const CMat &A, const CMat &B);

// EVM of the effective channel E = H A B: ||E - g I||_F / (sqrt(K) |g|), g = tr(E) / K.
double evm_of(const CMat &E);

} // namespace mimofe::precoder
