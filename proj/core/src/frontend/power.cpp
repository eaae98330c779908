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

#include "mimofe/frontend/power.hpp"

#include <cmath>
#include <stdexcept>

namespace mimofe::frontend {

int division_stages(int n)
{
    if (n < 1)
        throw std::invalid_argument("division_stages: n must be >= 1");
    int stages = 0;
    while ((1 << stages) < n)
        ++stages;
    return stages;
}

WilkinsonResult wilkinson_combine(std::span<const cplx> inputs)
{
    if (inputs.size() < 2)
        throw std::invalid_argument("wilkinson_combine: need at least two inputs");
    cplx sum = 0.0;
    double in_power = 0.0;
    for (const cplx &u : inputs) {
        sum += u;
        in_power += std::norm(u);
    }
    const cplx out = sum / std::sqrt(static_cast<double>(inputs.size()));
    // Cauchy-Schwarz makes this non-negative; clamp rounding noise.
    return {out, std::max(0.0, in_power - std::norm(out))};
}

namespace {

// Mean squared column norm of the lens network (both stacks).
double lens_power_factor(const ArchitectureSpec &spec)
{
    const CMat &l = spec.fixed_transfer();
    return l.colwise().squaredNorm().mean();
}

} // namespace

PowerBreakdown consumed_power(const ArchitectureSpec &spec, double p_t, double combining_efficiency)
{
    if (!(p_t > 0.0) || !std::isfinite(p_t))
        throw std::invalid_argument("consumed_power: transmit power must be positive");
    if (!(combining_efficiency > 0.0 && combining_efficiency <= 1.0))
        throw std::invalid_argument("consumed_power: combining efficiency must lie in (0, 1]");

    const RfParams &rf = spec.rf();
    PowerBreakdown pb;
    pb.p_radiated = p_t;

    if (spec.variant() == Variant::Ideal) {
        pb.p_pa_out = pb.p_pa_dc = pb.p_total = p_t;
        return pb;
    }

    const double ps_power = db_to_power(-rf.ps_loss_db);
    switch (spec.variant()) {
    case Variant::TaraFi:
    case Variant::TaraSi: pb.p_pa_out = p_t / (spec.mean_spillover() * ps_power); break;
    case Variant::Rl:
        pb.p_pa_out = p_t / (db_to_power(-rf.switch_il_db) * lens_power_factor(spec));
        break;
    default: pb.p_pa_out = p_t; break;
    }
    pb.p_pa_dc = pb.p_pa_out / rf.eta_pae;
    pb.p_rf_chains = spec.rf_chain_count() * rf.p_rf_chain;

    if (spec.is_hadb()) {
        const bool fc = spec.variant() == Variant::HadbFc;
        const int fan_out = fc ? spec.n_t() : spec.n_t() / spec.n_rf();
        const int stages = division_stages(fan_out);
        const int imas = spec.n_rf() * stages;
        const double network_loss = db_to_power(stages * rf.divider_excess_db + rf.ps_loss_db);
        const double eff = fc ? combining_efficiency : 1.0;
        const double drive = pb.p_pa_out * db_to_power(-rf.pa_gain_db);
        const double make_up = drive * (network_loss / eff - 1.0);
        pb.p_ima = imas * rf.p_ima_fixed + make_up / rf.eta_ima;
    }

    pb.p_total = pb.p_pa_dc + pb.p_rf_chains + pb.p_ima;
    return pb;
}

ComponentCount count_components(const ArchitectureSpec &spec)
{
    const int n_t = spec.n_t();
    const int k = spec.n_rf();
    ComponentCount c;
    switch (spec.variant()) {
    case Variant::FD:
    case Variant::Ideal: c.lines = n_t; break;
    case Variant::HadbFc:
        c.lines = n_t * k;
        c.phase_shifters = n_t * k;
        c.dividers = k * (n_t - 1);
        c.combiners = n_t;
        c.imas = k * division_stages(n_t);
        break;
    case Variant::HadbPc:
        c.lines = n_t;
        c.phase_shifters = n_t;
        c.dividers = n_t - k;
        c.imas = k * division_stages(n_t / k);
        break;
    case Variant::TaraFi:
    case Variant::TaraSi:
        c.lines = k;
        c.phase_shifters = n_t;
        break;
    case Variant::Rl:
        c.lines = k + spec.n_beams();
        c.switches = 1;
        break;
    }
    return c;
}

} // namespace mimofe::frontend
