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
#include "mimofe/frontend/illumination.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace mimofe::frontend {

using aperture::ArrayGeometry;
using aperture::ElementPattern;

enum class Variant { FD, HadbFc, HadbPc, TaraFi, TaraSi, Rl, Ideal };

// The six architectures compared by the experiments (Ideal is the steering
// reference and is never precoded).
inline constexpr Variant kCompared[] = {Variant::FD,     Variant::HadbFc, Variant::HadbPc,
                                        Variant::TaraFi, Variant::TaraSi, Variant::Rl};

std::string_view to_string(Variant v);
std::optional<Variant> parse_variant(std::string_view text);

enum class Band { FR1, FR2 };
std::string_view to_string(Band b);
std::optional<Band> parse_band(std::string_view text);

/// RF component parameters. Loss values are in dB, powers in W.
struct RfParams
{
    Band band = Band::FR1;
    double p_rf_chain = 2.08;
    double eta_pae = 0.5;
    double ps_loss_db = 1.0;
    int phase_bits = 2;
    double p_ima_fixed = 0.1;
    double eta_ima = 0.25;
    double divider_excess_db = 0.3;
    double lens_il_db = 2.0;
    double switch_il_db = 0.5;
    double pa_gain_db = 15.0; // sets the PA drive level the intermediate amplifiers make up for

    static RfParams preset(Band band);
    // Throws std::invalid_argument when an invariant is violated.
    void validate() const;

    double ps_amplitude() const { return db_to_amplitude(-ps_loss_db); }

    bool operator==(const RfParams &) const = default;
};

/// Geometric design choices for the fixed analog networks.
struct DesignParams
{
    ElementPattern element = ElementPattern::cosine(1.0);
    double spacing = 0.5;

    // TARA illumination
    double fi_feed_square_side = 0.6;
    double focal_ratio = 1.0;
    double edge_taper_db = -10.0;
    int cell_points = 6;
    // Rescales every feed column to unit power (no spillover); limit studies only.
    bool lossless_illumination = false;

    // Rotman lens network
    int lens_beams_per_axis = 5;
    double lens_theta_max = deg_to_rad(45.0);

    bool operator==(const DesignParams &) const = default;
};

/// Immutable description of one front-end. Built by build_architecture().
class ArchitectureSpec
{
  public:
    Variant variant() const { return variant_; }
    int n_t() const { return array_.size(); }
    // Number of simultaneously served users / data streams.
    int n_rf() const { return n_rf_; }
    // Physical RF chains (FD has one per antenna).
    int rf_chain_count() const;
    int phase_bits() const { return rf_.phase_bits; }
    int phase_levels() const { return 1 << rf_.phase_bits; }
    const RfParams &rf() const { return rf_; }
    const DesignParams &design() const { return design_; }
    const ArrayGeometry &array() const { return array_; }
    const ElementPattern &element() const { return design_.element; }

    // TARA: N_t x K illumination matrix; RL: N_t x N_b beam matrix; else empty.
    const CMat &fixed_transfer() const { return fixed_transfer_; }
    int n_beams() const { return variant_ == Variant::Rl ? static_cast<int>(fixed_transfer_.cols()) : 0; }

    // Element -> chain assignment for PC and SI, empty otherwise.
    const std::vector<int> &subarray() const { return subarray_; }
    const Illuminator &illuminator() const { return illuminator_; }

    // Per-feed captured power fraction (TARA only).
    const std::vector<double> &spillover() const { return spillover_; }
    double mean_spillover() const;

    // Number of tunable phase shifters.
    int tunable_phase_count() const;

    bool is_tara() const { return variant_ == Variant::TaraFi || variant_ == Variant::TaraSi; }
    bool is_hadb() const { return variant_ == Variant::HadbFc || variant_ == Variant::HadbPc; }

  private:
    friend ArchitectureSpec build_architecture(Variant, const ArrayGeometry &, int, const RfParams &,
                                               const DesignParams &);

    Variant variant_ = Variant::FD;
    int n_rf_ = 0;
    RfParams rf_;
    DesignParams design_;
    ArrayGeometry array_;
    CMat fixed_transfer_;
    std::vector<int> subarray_;
    Illuminator illuminator_;
    std::vector<double> spillover_;
};

/// Tunable analog configuration. Phase indices address the 2^bits grid;
/// beam_selection lists one beamport per RF chain (RL only).
///   FC: phases[m * K + k] for antenna m, chain k
///   PC, TARA: phases[m] for antenna m
struct AnalogState
{
    std::vector<int> phases;
    std::vector<int> beam_selection;

    bool operator==(const AnalogState &) const = default;
};

/// Builds the front-end on an explicit geometry.
/// Throws std::invalid_argument when subarrays cannot be formed (N_t not
/// divisible by K), when the lens offers fewer beams than K, or for invalid
/// parameters.
ArchitectureSpec build_architecture(Variant variant, const ArrayGeometry &geom, int n_rf, const RfParams &rf,
                                    const DesignParams &design = {});

/// Builds the front-end on a square URA with N_t elements.
ArchitectureSpec build_architecture(Variant variant, int n_t, int n_rf, const RfParams &rf,
                                    const DesignParams &design = {});

/// Element -> chain map: square blocks when K is a perfect square dividing both
/// axes, contiguous index blocks otherwise.
std::vector<int> subarray_tiling(const ArrayGeometry &geom, int n_rf);

struct QuantizedPhase
{
    int index = 0;
    double value = 0.0; // in [0, 2 pi)
};

/// Nearest point of {2 pi i / 2^bits}, wrap-around aware; ties go to the lower
/// index. Throws std::invalid_argument for bits < 1.
QuantizedPhase quantize_phase(double phi, int bits);

/// exp(j 2 pi i / 2^bits)
cplx phase_level(int index, int bits);

/// An AnalogState with the right layout for spec and every index zero.
AnalogState zero_state(const ArchitectureSpec &spec);

/// Throws std::invalid_argument if the state does not fit the spec.
void validate_state(const ArchitectureSpec &spec, const AnalogState &state);

/// N_t x n columns mapping RF-chain signals to antenna excitations (n = N_t
/// for FD and Ideal, K otherwise). Every column has squared norm <= 1.
CMat analog_transfer(const ArchitectureSpec &spec, const AnalogState &state);

// Row of A (and its index) touched by phase coordinate c.
int phase_row_index(const ArchitectureSpec &spec, int c);

// That row after setting coordinate c to the given level; A holds the current transfer.
CRow phase_row_update(const ArchitectureSpec &spec, const CMat &A, int c, int level);

} // namespace mimofe::frontend

namespace mimofe::frontend {

/// Captured power fraction of feed k (sum_m |G_mk|^2). Throws
/// std::invalid_argument for non-TARA variants or a bad feed index.
double spillover_efficiency(const ArchitectureSpec &spec, int k);

/// Mean over feeds.
double spillover_efficiency(const ArchitectureSpec &spec);

} // namespace mimofe::frontend
