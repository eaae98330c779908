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

#include "mimofe/aperture/channel.hpp"
#include "mimofe/aperture/radiation.hpp"
#include "mimofe/frontend/power.hpp"
#include "mimofe/precoder/solve.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace mimofe::metrics {

using aperture::Direction;
using frontend::ArchitectureSpec;
using frontend::Variant;

/// One output row; the field order is the CSV column order.
struct MetricRecord
{
    std::string experiment;
    std::string architecture;
    std::string scenario;
    std::string band;
    double p_t_w = 0.0;
    int n_t = 0;
    std::string metric;
    double value = 0.0;
    int n_realizations = 0;
    int excluded = 0;
    std::uint64_t seed = 0;

    bool operator==(const MetricRecord &) const = default;
};

/// Record order used for output: architecture, scenario, band, p_t, n_t, metric.
bool record_less(const MetricRecord &a, const MetricRecord &b);

struct IdealReference
{
    CVec w;
    double directivity = 0.0;
};

/// Conjugate (maximum-ratio) excitation and its directivity.
IdealReference ideal_reference(const aperture::ArrayGeometry &geom, const aperture::ElementPattern &pattern,
                               const Direction &dir);

// ---------------------------------------------------------------- system loss

struct SystemLossOptions
{
    int n_realizations = 200;
    std::uint64_t seed = 42;
    double p_t = 20.0;
    double evm_target = 0.0;
    precoder::OptimizerConfig optimizer;
    int threads = 1;
};

struct SystemLossEntry
{
    Variant variant = Variant::FD;
    double mean_rx = 0.0;       // mean K g^2 over feasible realizations
    double mean_rx_total = 0.0; // mean ||H A B||_F^2
    double sl_rel_db = 0.0;
    double sl_total_rel_db = 0.0;
    int excluded = 0;
    std::vector<double> g_squared; // per realization, NaN where excluded
};

struct SystemLossResult
{
    aperture::ScenarioLabel scenario = aperture::ScenarioLabel::UMaLos;
    int n_realizations = 0;
    std::uint64_t seed = 0;
    std::vector<SystemLossEntry> entries; // same order as the specs passed in
    std::vector<double> fd_g_squared;     // FD reference per realization
};

/// Monte-Carlo system loss of every spec relative to FD on one scenario.
/// All specs must share the array and K. FD is evaluated internally as the
/// reference even when absent from specs.
SystemLossResult system_loss(const std::vector<ArchitectureSpec> &specs, const aperture::ChannelScenario &scenario,
                             const SystemLossOptions &options);

std::vector<MetricRecord> to_records(const SystemLossResult &result, const std::string &band, double p_t,
                                     bool include_total);

// ----------------------------------------------------------- steering efficiency

struct SteeringResult
{
    double se = 0.0;
    double d_arch = 0.0;
    double d_ideal = 0.0;
    CVec excitation;                  // antenna excitation, scaled to unit norm
    frontend::AnalogState state;
    frontend::PowerBreakdown power;
};

/// Single-user steering: the analog state maximizing |a^H x|^2 / ||x||^2 with
/// all chains driven equally (RL: best single beamport), then
/// SE = (p_t / p_total) * D_arch / D_ideal.
SteeringResult steering_efficiency(const ArchitectureSpec &spec, const Direction &dir, double p_t);

/// Mean SE over a regular grid of directions inside the sector.
double steering_efficiency_sector(const ArchitectureSpec &spec, const aperture::Sector &sector, double p_t,
                                  int n_azimuth = 5, int n_elevation = 3);

struct SeSweepOptions
{
    std::vector<Variant> variants;
    int n_rf = 4;
    int n_t = 64;      // used by the power sweep
    double p_t = 20.0; // used by the antenna sweep
    std::vector<double> p_t_grid{0.1, 0.2, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0, 50.0, 100.0};
    std::vector<int> n_t_grid{16, 64, 256};
    Direction direction = Direction::from_degrees(10.0, 0.0);
    bool sector_average = false;
    frontend::DesignParams design;
};

/// SE over the p_t grid (at n_t) and over the n_t grid (at p_t) for one band.
std::vector<MetricRecord> se_sweep(const SeSweepOptions &options, const frontend::RfParams &rf);

// ------------------------------------------------------------------ ledgers

std::vector<MetricRecord> power_records(const ArchitectureSpec &spec, double p_t, const std::string &band);
std::vector<MetricRecord> component_records(const ArchitectureSpec &spec, const std::string &band);

} // namespace mimofe::metrics
