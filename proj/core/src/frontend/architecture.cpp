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

#include "mimofe/frontend/architecture.hpp"
#include "mimofe/frontend/rotman.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace mimofe::frontend {

std::string_view to_string(Variant v)
{
    switch (v) {
    case Variant::FD: return "FD";
    case Variant::HadbFc: return "HADB-FC";
    case Variant::HadbPc: return "HADB-PC";
    case Variant::TaraFi: return "TARA-FI";
    case Variant::TaraSi: return "TARA-SI";
    case Variant::Rl: return "RL";
    case Variant::Ideal: return "Ideal";
    }
    return "?";
}

std::optional<Variant> parse_variant(std::string_view text)
{
    for (auto v : {Variant::FD, Variant::HadbFc, Variant::HadbPc, Variant::TaraFi, Variant::TaraSi, Variant::Rl,
                   Variant::Ideal})
        if (to_string(v) == text)
            return v;
    return std::nullopt;
}

std::string_view to_string(Band b) { return b == Band::FR1 ? "FR1" : "FR2"; }

std::optional<Band> parse_band(std::string_view text)
{
    if (text == "FR1")
        return Band::FR1;
    if (text == "FR2")
        return Band::FR2;
    return std::nullopt;
}

RfParams RfParams::preset(Band band)
{
    RfParams p;
    p.band = band;
    if (band == Band::FR2) {
        p.p_rf_chain = 2.6;
        p.ps_loss_db = 2.0;
        p.p_ima_fixed = 0.15;
        p.lens_il_db = 3.0;
        p.switch_il_db = 1.5;
    }
    return p;
}

void RfParams::validate() const
{
    auto fail = [](const char *what) { throw std::invalid_argument(std::string("RfParams: ") + what); };
    if (!(eta_pae > 0.0 && eta_pae <= 1.0))
        fail("eta_pae must lie in (0, 1]");
    if (!(eta_ima > 0.0 && eta_ima <= 1.0))
        fail("eta_ima must lie in (0, 1]");
    if (!(p_rf_chain >= 0.0) || !(p_ima_fixed >= 0.0))
        fail("static powers must be >= 0");
    if (!(ps_loss_db >= 0.0) || !(divider_excess_db >= 0.0) || !(lens_il_db >= 0.0) || !(switch_il_db >= 0.0))
        fail("losses must be >= 0 dB");
    if (!(pa_gain_db >= 0.0))
        fail("pa_gain_db must be >= 0");
    if (phase_bits < 1 || phase_bits > 16)
        fail("phase_bits must lie in [1, 16]");
}

int ArchitectureSpec::rf_chain_count() const
{
    switch (variant_) {
    case Variant::FD: return n_t();
    case Variant::Ideal: return 0;
    default: return n_rf_;
    }
}

int ArchitectureSpec::tunable_phase_count() const
{
    switch (variant_) {
    case Variant::HadbFc: return n_t() * n_rf_;
    case Variant::HadbPc:
    case Variant::TaraFi:
    case Variant::TaraSi: return n_t();
    default: return 0;
    }
}

double ArchitectureSpec::mean_spillover() const
{
    if (spillover_.empty())
        return 1.0;
    return std::accumulate(spillover_.begin(), spillover_.end(), 0.0) / static_cast<double>(spillover_.size());
}

std::vector<int> subarray_tiling(const ArrayGeometry &geom, int n_rf)
{
    const int n_t = geom.size();
    if (n_rf < 1 || n_t % n_rf != 0)
        throw std::invalid_argument("subarray_tiling: N_t = " + std::to_string(n_t) +
                                    " is not divisible by K = " + std::to_string(n_rf));
    std::vector<int> sub(n_t);
    const int r = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n_rf))));
    const bool blocks = r * r == n_rf && geom.n_horizontal % r == 0 && geom.n_vertical % r == 0 &&
                        geom.n_horizontal * geom.n_vertical == n_t;
    if (blocks) {
        const int bh = geom.n_horizontal / r;
        const int bv = geom.n_vertical / r;
        for (int ih = 0; ih < geom.n_horizontal; ++ih)
            for (int iv = 0; iv < geom.n_vertical; ++iv)
                sub[ih * geom.n_vertical + iv] = (ih / bh) * r + iv / bv;
    } else {
        const int size = n_t / n_rf;
        for (int m = 0; m < n_t; ++m)
            sub[m] = m / size;
    }
    return sub;
}

ArchitectureSpec build_architecture(Variant variant, const ArrayGeometry &geom, int n_rf, const RfParams &rf,
                                    const DesignParams &design)
{
    rf.validate();
    const int n_t = geom.size();
    if (n_t < 1)
        throw std::invalid_argument("build_architecture: empty array");
    if (n_rf < 1)
        throw std::invalid_argument("build_architecture: K must be >= 1");
    if (variant != Variant::FD && variant != Variant::Ideal && n_rf > n_t)
        throw std::invalid_argument("build_architecture: more RF chains than antennas");

    ArchitectureSpec s;
    s.variant_ = variant;
    s.n_rf_ = n_rf;
    s.rf_ = rf;
    s.design_ = design;
    s.array_ = geom;

    switch (variant) {
    case Variant::FD:
    case Variant::Ideal:
    case Variant::HadbFc: break;
    case Variant::HadbPc: s.subarray_ = subarray_tiling(geom, n_rf); break;
    case Variant::TaraFi:
        s.illuminator_ = full_illumination_layout(geom, n_rf, design.fi_feed_square_side, design.focal_ratio,
                                                  design.edge_taper_db);
        break;
    case Variant::TaraSi:
        s.subarray_ = subarray_tiling(geom, n_rf);
        s.illuminator_ =
            separate_illumination_layout(geom, s.subarray_, n_rf, design.focal_ratio, design.edge_taper_db);
        break;
    case Variant::Rl: {
        const int ports = (geom.n_horizontal > 1 && geom.n_vertical > 1)
                              ? geom.n_horizontal
                              : std::max(geom.n_horizontal, geom.n_vertical);
        s.fixed_transfer_ =
            rotman_beam_matrix(ports, design.lens_beams_per_axis, geom, design.lens_theta_max, rf.lens_il_db);
        if (s.fixed_transfer_.cols() < n_rf)
            throw std::invalid_argument("build_architecture: lens offers " +
                                        std::to_string(s.fixed_transfer_.cols()) + " beams for K = " +
                                        std::to_string(n_rf));
        break;
    }
    }

    if (s.is_tara()) {
        s.fixed_transfer_ = illumination_matrix(s.illuminator_, geom, design.cell_points);
        if (design.lossless_illumination)
            s.fixed_transfer_.colwise().normalize();
        s.spillover_.resize(n_rf);
        for (int k = 0; k < n_rf; ++k)
            s.spillover_[k] = s.fixed_transfer_.col(k).squaredNorm();
    }
    return s;
}

ArchitectureSpec build_architecture(Variant variant, int n_t, int n_rf, const RfParams &rf,
                                    const DesignParams &design)
{
    const int side = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n_t))));
    if (n_t < 1 || side * side != n_t)
        throw std::invalid_argument("build_architecture: N_t = " + std::to_string(n_t) +
                                    " is not a square URA size");
    return build_architecture(variant, aperture::build_ura(side, side, design.spacing), n_rf, rf, design);
}

double spillover_efficiency(const ArchitectureSpec &spec, int k)
{
    if (!spec.is_tara())
        throw std::invalid_argument("spillover_efficiency: only defined for TARA variants");
    if (k < 0 || k >= spec.n_rf())
        throw std::invalid_argument("spillover_efficiency: feed index out of range");
    return spec.spillover()[k];
}

double spillover_efficiency(const ArchitectureSpec &spec)
{
    if (!spec.is_tara())
        throw std::invalid_argument("spillover_efficiency: only defined for TARA variants");
    return spec.mean_spillover();
}

QuantizedPhase quantize_phase(double phi, int bits)
{
    if (bits < 1 || bits > 30)
        throw std::invalid_argument("quantize_phase: bits must be >= 1");
    const int levels = 1 << bits;
    const double step = kTwoPi / levels;
    double x = std::fmod(phi, kTwoPi);
    if (x < 0.0)
        x += kTwoPi;
    const double t = x / step;
    int idx = static_cast<int>(std::floor(t));
    const double frac = t - idx;
    if (frac > 0.5)
        ++idx;
    else if (frac == 0.5 && idx + 1 == levels)
        idx = 0; // tie between the last level and 0: the lower index wins
    idx %= levels;
    return {idx, idx * step};
}

cplx phase_level(int index, int bits) { return unit_phasor(kTwoPi * index / (1 << bits)); }

AnalogState zero_state(const ArchitectureSpec &spec)
{
    AnalogState st;
    st.phases.assign(spec.tunable_phase_count(), 0);
    if (spec.variant() == Variant::Rl) {
        st.beam_selection.resize(spec.n_rf());
        std::iota(st.beam_selection.begin(), st.beam_selection.end(), 0);
    }
    return st;
}

void validate_state(const ArchitectureSpec &spec, const AnalogState &state)
{
    if (static_cast<int>(state.phases.size()) != spec.tunable_phase_count())
        throw std::invalid_argument("analog state: expected " + std::to_string(spec.tunable_phase_count()) +
                                    " phase indices, got " + std::to_string(state.phases.size()));
    for (int p : state.phases)
        if (p < 0 || p >= spec.phase_levels())
            throw std::invalid_argument("analog state: phase index out of range");

    if (spec.variant() == Variant::Rl) {
        if (static_cast<int>(state.beam_selection.size()) != spec.n_rf())
            throw std::invalid_argument("analog state: RL needs one beamport per RF chain");
        std::vector<int> sorted = state.beam_selection;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("analog state: beamports must be distinct");
        if (sorted.front() < 0 || sorted.back() >= spec.n_beams())
            throw std::invalid_argument("analog state: beamport index out of range");
    } else if (!state.beam_selection.empty()) {
        throw std::invalid_argument("analog state: beam selection only applies to RL");
    }
}

CMat analog_transfer(const ArchitectureSpec &spec, const AnalogState &state)
{
    validate_state(spec, state);
    const int n_t = spec.n_t();
    const int k = spec.n_rf();
    const int bits = spec.phase_bits();
    const double gamma = spec.rf().ps_amplitude();

    switch (spec.variant()) {
    case Variant::FD:
    case Variant::Ideal: return CMat::Identity(n_t, n_t);
    case Variant::HadbFc: {
        CMat a(n_t, k);
        const double amp = gamma / std::sqrt(static_cast<double>(n_t));
        for (int m = 0; m < n_t; ++m)
            for (int c = 0; c < k; ++c)
                a(m, c) = amp * phase_level(state.phases[m * k + c], bits);
        return a;
    }
    case Variant::HadbPc: {
        CMat a = CMat::Zero(n_t, k);
        const double amp = gamma / std::sqrt(static_cast<double>(n_t / k));
        for (int m = 0; m < n_t; ++m)
            a(m, spec.subarray()[m]) = amp * phase_level(state.phases[m], bits);
        return a;
    }
    case Variant::TaraFi:
    case Variant::TaraSi: {
        CMat a = spec.fixed_transfer();
        for (int m = 0; m < n_t; ++m)
            a.row(m) *= gamma * phase_level(state.phases[m], bits);
        return a;
    }
    case Variant::Rl: {
        CMat a(n_t, k);
        const double amp = db_to_amplitude(-spec.rf().switch_il_db);
        for (int c = 0; c < k; ++c)
            a.col(c) = amp * spec.fixed_transfer().col(state.beam_selection[c]);
        return a;
    }
    }
    return {};
}

int phase_row_index(const ArchitectureSpec &spec, int c)
{
    return spec.variant() == Variant::HadbFc ? c / spec.n_rf() : c;
}

CRow phase_row_update(const ArchitectureSpec &spec, const CMat &A, int c, int level)
{
    const int k = spec.n_rf();
    const int bits = spec.phase_bits();
    const double gamma = spec.rf().ps_amplitude();
    switch (spec.variant()) {
    case Variant::HadbFc: {
        CRow row = A.row(c / k);
        row(c % k) = gamma / std::sqrt(static_cast<double>(spec.n_t())) * phase_level(level, bits);
        return row;
    }
    case Variant::HadbPc: {
        CRow row = CRow::Zero(k);
        row(spec.subarray()[c]) = gamma / std::sqrt(static_cast<double>(spec.n_t() / k)) * phase_level(level, bits);
        return row;
    }
    case Variant::TaraFi:
    case Variant::TaraSi: return (gamma * phase_level(level, bits)) * spec.fixed_transfer().row(c);
    default: throw std::invalid_argument("phase_row_update: variant has no tunable phases");
    }
}

} // namespace mimofe::frontend
