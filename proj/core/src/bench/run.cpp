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


#include "mimofe/bench/run.hpp"
#include "mimofe/bench/csv.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>

namespace mimofe::bench {

using frontend::ArchitectureSpec;
using frontend::Band;

namespace {

std::vector<ArchitectureSpec> build_specs(const RunConfig &c, Band band, int n_t)
{
    std::vector<ArchitectureSpec> specs;
    for (auto v : c.architectures) {
        try {
            specs.push_back(frontend::build_architecture(v, n_t, c.system.n_rf, c.rf(band), c.design));
        } catch (const std::invalid_argument &e) {
            throw ConfigError(0, std::string(frontend::to_string(v)) + ": " + e.what());
        }
    }
    return specs;
}

} // namespace

ExperimentResult execute(const RunConfig &c)
{
    ExperimentResult out;
    const std::string band(frontend::to_string(c.band));
    switch (c.experiment) {
    case Experiment::SysLoss: {
        const auto specs = build_specs(c, c.band, c.system.n_t);
        metrics::SystemLossOptions opt;
        opt.n_realizations = c.n_realizations;
        opt.seed = c.seed;
        opt.p_t = c.system.p_t;
        opt.evm_target = c.system.evm_target;
        opt.optimizer = c.optimizer;
        opt.threads = c.threads;
        for (auto label : c.scenarios) {
            const auto res = metrics::system_loss(specs, aperture::ChannelScenario::preset(label), opt);
            for (auto r : metrics::to_records(res, band, c.system.p_t, c.system.evm_target > 0.0)) {
                r.n_t = c.system.n_t;
                out.records.push_back(std::move(r));
            }
            for (const auto &e : res.entries)
                if (e.excluded > kMaxExclusionRate * res.n_realizations)
                    out.problems.push_back(std::string(frontend::to_string(e.variant)) + " on " +
                                           std::string(aperture::to_string(label)) + ": " +
                                           std::to_string(e.excluded) + " of " + std::to_string(res.n_realizations) +
                                           " realizations infeasible");
        }
        break;
    }
    case Experiment::SteerEff: {
        metrics::SeSweepOptions opt;
        opt.variants = c.architectures;
        opt.n_rf = c.system.n_rf;
        opt.n_t = c.system.n_t;
        opt.p_t = c.system.p_t;
        opt.p_t_grid = c.sweep.p_t_grid;
        opt.n_t_grid = c.sweep.n_t_grid;
        opt.direction = aperture::Direction::from_degrees(c.sweep.azimuth_deg, c.sweep.elevation_deg);
        opt.sector_average = c.sweep.sector_average;
        opt.design = c.design;
        build_specs(c, Band::FR1, c.system.n_t); // surfaces layout errors as config errors
        for (int n : c.sweep.n_t_grid)
            build_specs(c, Band::FR1, n);
        for (auto b : c.sweep.bands)
            for (auto &r : metrics::se_sweep(opt, c.rf(b)))
                out.records.push_back(std::move(r));
        break;
    }
    case Experiment::Power:
        for (const auto &s : build_specs(c, c.band, c.system.n_t))
            for (auto &r : metrics::power_records(s, c.system.p_t, band))
                out.records.push_back(std::move(r));
        break;
    case Experiment::Components:
        for (const auto &s : build_specs(c, c.band, c.system.n_t))
            for (auto &r : metrics::component_records(s, band))
                out.records.push_back(std::move(r));
        break;
    }
    for (auto &r : out.records)
        r.seed = c.seed;
    std::stable_sort(out.records.begin(), out.records.end(), metrics::record_less);
    return out;
}

int run(const RunConfig &c, std::ostream &log)
{
    ExperimentResult res;
    try {
        res = execute(c);
    } catch (const ConfigError &e) {
        log << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::exception &e) {
        log << "experiment error: " << e.what() << "\n";
        return kExitExperimentError;
    }

    namespace fs = std::filesystem;
    const fs::path dir(c.output);
    const std::string stem(to_string(c.experiment));
    try {
        fs::create_directories(dir);
        {
            std::ofstream f(dir / (stem + ".csv"), std::ios::binary);
            write_csv(f, res.records);
            if (!f)
                throw std::runtime_error("cannot write " + (dir / (stem + ".csv")).string());
        }
        {
            std::ofstream f(dir / (stem + ".toml"), std::ios::binary);
            f << echo_config(c);
            if (!f)
                throw std::runtime_error("cannot write " + (dir / (stem + ".toml")).string());
        }
    } catch (const std::exception &e) {
        log << "I/O error: " << e.what() << "\n";
        return kExitExperimentError;
    }
    log << "wrote " << res.records.size() << " records to " << (dir / (stem + ".csv")).string() << "\n";
    for (const auto &p : res.problems)
        log << "experiment error: " << p << "\n";
    return res.problems.empty() ? kExitOk : kExitExperimentError;
}

} // namespace mimofe::bench
