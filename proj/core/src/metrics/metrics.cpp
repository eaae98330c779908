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


#include "mimofe/metrics/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace mimofe::metrics {

using frontend::AnalogState;
using frontend::build_architecture;
using frontend::to_string;

bool record_less(const MetricRecord &a, const MetricRecord &b)
{
    return std::tie(a.experiment, a.architecture, a.scenario, a.band, a.p_t_w, a.n_t, a.metric) <
           std::tie(b.experiment, b.architecture, b.scenario, b.band, b.p_t_w, b.n_t, b.metric);
}

IdealReference ideal_reference(const aperture::ArrayGeometry &geom, const aperture::ElementPattern &pattern,
                               const Direction &dir)
{
    IdealReference ref;
    ref.w = aperture::steering_vector(geom, pattern, dir);
    ref.directivity = aperture::directivity(geom, pattern, ref.w, dir);
    return ref;
}

// ---------------------------------------------------------------- system loss

SystemLossResult system_loss(const std::vector<ArchitectureSpec> &specs, const aperture::ChannelScenario &scenario,
                             const SystemLossOptions &options)
{
    if (specs.empty())
        throw std::invalid_argument("system_loss: no architectures");
    if (options.n_realizations < 1)
        throw std::invalid_argument("system_loss: n_realizations must be >= 1");
    const ArchitectureSpec &first = specs.front();
    for (const auto &s : specs)
        if (s.n_t() != first.n_t() || s.n_rf() != first.n_rf())
            throw std::invalid_argument("system_loss: architectures must share N_t and K");

    const auto fd_it = std::find_if(specs.begin(), specs.end(), [](const auto &s) { return s.variant() == Variant::FD; });
    const ArchitectureSpec fd = fd_it != specs.end()
                                    ? *fd_it
                                    : build_architecture(Variant::FD, first.array(), first.n_rf(), first.rf(),
                                                         first.design());

    const int n = options.n_realizations;
    const std::size_t na = specs.size();
    const double nan = std::numeric_limits<double>::quiet_NaN();
    std::vector<std::vector<double>> g2(na, std::vector<double>(n, nan));
    std::vector<std::vector<double>> tot(na, std::vector<double>(n, nan));
    std::vector<double> fd_g2(n, nan), fd_tot(n, nan);

    auto run_one = [&](int i) {
        const auto ch = aperture::generate_channel(scenario, first.array(), first.element(), first.n_rf(),
                                                   options.seed, static_cast<std::uint64_t>(i));
        precoder::OptimizerConfig opt = options.optimizer;
        opt.seed = options.optimizer.seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(i + 1);
        const auto ref = precoder::solve(fd, ch.H, options.p_t, options.evm_target, opt);
        if (ref.feasible) {
            fd_g2[i] = ref.g_squared;
            fd_tot[i] = ref.rx_total;
        }
        for (std::size_t a = 0; a < na; ++a) {
            const auto sol = specs[a].variant() == Variant::FD
                                 ? ref
                                 : precoder::solve(specs[a], ch.H, options.p_t, options.evm_target, opt);
            if (sol.feasible) {
                g2[a][i] = sol.g_squared;
                tot[a][i] = sol.rx_total;
            }
        }
    };

    const int threads = std::clamp(options.threads, 1, n);
    if (threads == 1) {
        for (int i = 0; i < n; ++i)
            run_one(i);
    } else {
        std::exception_ptr error;
        std::mutex error_mutex;
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&, t] {
                try {
                    for (int i = t; i < n; i += threads)
                        run_one(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error)
                        error = std::current_exception();
                }
            });
        for (auto &th : pool)
            th.join();
        if (error)
            std::rethrow_exception(error);
    }

    auto mean = [nan](const std::vector<double> &v, int &excluded) {
        double s = 0.0;
        int c = 0;
        excluded = 0;
        for (double x : v) {
            if (std::isnan(x)) {
                ++excluded;
                continue;
            }
            s += x;
            ++c;
        }
        return c > 0 ? s / c : nan;
    };

    const double k = static_cast<double>(first.n_rf());
    int fd_excl = 0;
    const double fd_rx = k * mean(fd_g2, fd_excl);
    const double fd_rx_tot = mean(fd_tot, fd_excl);

    SystemLossResult res;
    res.scenario = scenario.label;
    res.n_realizations = n;
    res.seed = options.seed;
    res.fd_g_squared = fd_g2;
    for (std::size_t a = 0; a < na; ++a) {
        SystemLossEntry e;
        e.variant = specs[a].variant();
        e.mean_rx = k * mean(g2[a], e.excluded);
        e.mean_rx_total = mean(tot[a], e.excluded);
        if (e.variant == Variant::FD) {
            e.sl_rel_db = 0.0;
            e.sl_total_rel_db = 0.0;
        } else {
            e.sl_rel_db = power_to_db(e.mean_rx / fd_rx);
            e.sl_total_rel_db = power_to_db(e.mean_rx_total / fd_rx_tot);
        }
        e.g_squared = g2[a];
        res.entries.push_back(std::move(e));
    }
    return res;
}

std::vector<MetricRecord> to_records(const SystemLossResult &result, const std::string &band, double p_t,
                                     bool include_total)
{
    std::vector<MetricRecord> out;
    const std::string scenario(aperture::to_string(result.scenario));
    for (const auto &e : result.entries) {
        MetricRecord r;
        r.experiment = "sysloss";
        r.architecture = std::string(to_string(e.variant));
        r.scenario = scenario;
        r.band = band;
        r.p_t_w = p_t;
        r.n_t = 0;
        r.metric = "SL_rel_db";
        r.value = e.sl_rel_db;
        r.n_realizations = result.n_realizations;
        r.excluded = e.excluded;
        r.seed = result.seed;
        out.push_back(r);
        if (include_total) {
            r.metric = "SL_total_rel_db";
            r.value = e.sl_total_rel_db;
            out.push_back(r);
        }
    }
    return out;
}

// ----------------------------------------------------------- steering efficiency

namespace {

struct Steering
{
    AnalogState state;
    CVec x;
    double ce = 1.0;
    double d_arch = 0.0;
    double d_ideal = 0.0;
};

// Maximizes |a^H A 1|^2 / ||A 1||^2 over the phase indices by coordinate ascent.
AnalogState single_user_phases(const ArchitectureSpec &spec, const CVec &a)
{
    AnalogState st = frontend::zero_state(spec);
    const int bits = spec.phase_bits();
    const bool tara = spec.is_tara();
    for (int c = 0; c < spec.tunable_phase_count(); ++c) {
        const int m = frontend::phase_row_index(spec, c);
        double phi = std::arg(a(m));
        if (tara)
            phi -= std::arg(spec.fixed_transfer().row(m).sum());
        st.phases[c] = frontend::quantize_phase(phi, bits).index;
    }

    CMat A = frontend::analog_transfer(spec, st);
    CVec x = A.rowwise().sum();
    cplx s = a.dot(x);
    double nx = x.squaredNorm();
    for (int sweep = 0; sweep < 50; ++sweep) {
        bool changed = false;
        for (int c = 0; c < spec.tunable_phase_count(); ++c) {
            const int m = frontend::phase_row_index(spec, c);
            const double cur = std::norm(s) / nx;
            int best = st.phases[c];
            double best_val = cur;
            cplx best_xm = x(m);
            for (int lv = 0; lv < spec.phase_levels(); ++lv) {
                if (lv == st.phases[c])
                    continue;
                const cplx xm = frontend::phase_row_update(spec, A, c, lv).sum();
                const cplx s2 = s + std::conj(a(m)) * (xm - x(m));
                const double n2 = nx - std::norm(x(m)) + std::norm(xm);
                if (!(n2 > 0.0))
                    continue;
                const double v = std::norm(s2) / n2;
                if (v > best_val * (1.0 + 1e-12)) {
                    best_val = v;
                    best = lv;
                    best_xm = xm;
                }
            }
            if (best != st.phases[c]) {
                A.row(m) = frontend::phase_row_update(spec, A, c, best);
                s += std::conj(a(m)) * (best_xm - x(m));
                nx += std::norm(best_xm) - std::norm(x(m));
                x(m) = best_xm;
                st.phases[c] = best;
                changed = true;
            }
        }
        if (!changed)
            break;
    }
    return st;
}

Steering steer(const ArchitectureSpec &spec, const Direction &dir)
{
    const auto &geom = spec.array();
    const auto &pattern = spec.element();
    const CVec a = aperture::steering_vector(geom, pattern, dir);
    const auto quad = aperture::SphereQuadrature::for_geometry(geom);

    Steering out;
    out.d_ideal = aperture::directivity(geom, pattern, a, dir, quad);
    switch (spec.variant()) {
    case Variant::FD:
    case Variant::Ideal:
        out.x = a;
        out.d_arch = out.d_ideal;
        return out;
    case Variant::Rl: {
        const CMat &L = spec.fixed_transfer();
        int best = 0;
        double best_val = -1.0;
        for (int b = 0; b < L.cols(); ++b) {
            const double v = std::norm(a.dot(L.col(b))) / L.col(b).squaredNorm();
            if (v > best_val) {
                best_val = v;
                best = b;
            }
        }
        out.state.beam_selection.push_back(best);
        for (int b = 0; static_cast<int>(out.state.beam_selection.size()) < spec.n_rf(); ++b)
            if (b != best)
                out.state.beam_selection.push_back(b);
        out.x = L.col(best);
        break;
    }
    default: {
        out.state = single_user_phases(spec, a);
        const CMat A = frontend::analog_transfer(spec, out.state);
        const CMat b = CMat::Ones(spec.n_rf(), 1);
        out.x = A * b;
        if (spec.variant() == Variant::HadbFc)
            out.ce = precoder::combining_efficiency(A, b);
        break;
    }
    }
    out.d_arch = aperture::directivity(geom, pattern, out.x, dir, quad);
    return out;
}

SteeringResult assemble(const ArchitectureSpec &spec, const Steering &st, double p_t)
{
    SteeringResult r;
    r.d_arch = st.d_arch;
    r.d_ideal = st.d_ideal;
    r.state = st.state;
    r.excitation = st.x.normalized();
    r.power = frontend::consumed_power(spec, p_t, st.ce);
    r.se = p_t / r.power.p_total * (st.d_arch / st.d_ideal);
    return r;
}

} // namespace

SteeringResult steering_efficiency(const ArchitectureSpec &spec, const Direction &dir, double p_t)
{
    if (!(p_t > 0.0))
        throw std::invalid_argument("steering_efficiency: p_t must be > 0");
    return assemble(spec, steer(spec, dir), p_t);
}

double steering_efficiency_sector(const ArchitectureSpec &spec, const aperture::Sector &sector, double p_t,
                                  int n_azimuth, int n_elevation)
{
    if (n_azimuth < 1 || n_elevation < 1)
        throw std::invalid_argument("steering_efficiency_sector: empty grid");
    double sum = 0.0;
    for (int i = 0; i < n_azimuth; ++i)
        for (int j = 0; j < n_elevation; ++j) {
            const Direction d{sector.azimuth_min + (i + 0.5) * (sector.azimuth_max - sector.azimuth_min) / n_azimuth,
                              sector.elevation_min +
                                  (j + 0.5) * (sector.elevation_max - sector.elevation_min) / n_elevation};
            sum += steering_efficiency(spec, d, p_t).se;
        }
    return sum / (n_azimuth * n_elevation);
}

std::vector<MetricRecord> se_sweep(const SeSweepOptions &options, const frontend::RfParams &rf)
{
    if (options.p_t_grid.empty() && options.n_t_grid.empty())
        throw std::invalid_argument("se_sweep: empty grid");
    const std::string band(to_string(rf.band));
    std::vector<MetricRecord> out;
    auto emit = [&](Variant v, const char *sweep, double p_t, int n_t, double se) {
        MetricRecord r;
        r.experiment = "steereff";
        r.architecture = std::string(to_string(v));
        r.scenario = sweep;
        r.band = band;
        r.p_t_w = p_t;
        r.n_t = n_t;
        r.metric = "SE";
        r.value = se;
        out.push_back(std::move(r));
    };
    aperture::Sector sector;
    auto se_at = [&](const ArchitectureSpec &spec, const Steering &st, double p_t) {
        return options.sector_average ? steering_efficiency_sector(spec, sector, p_t) : assemble(spec, st, p_t).se;
    };

    for (Variant v : options.variants) {
        if (!options.p_t_grid.empty()) {
            const auto spec = build_architecture(v, options.n_t, options.n_rf, rf, options.design);
            const Steering st = options.sector_average ? Steering{} : steer(spec, options.direction);
            for (double p : options.p_t_grid)
                emit(v, "p_t-sweep", p, options.n_t, se_at(spec, st, p));
        }
        for (int n : options.n_t_grid) {
            const auto spec = build_architecture(v, n, options.n_rf, rf, options.design);
            const Steering st = options.sector_average ? Steering{} : steer(spec, options.direction);
            emit(v, "n_t-sweep", options.p_t, n, se_at(spec, st, options.p_t));
        }
    }
    return out;
}

// ------------------------------------------------------------------ ledgers

std::vector<MetricRecord> power_records(const ArchitectureSpec &spec, double p_t, const std::string &band)
{
    const auto pb = frontend::consumed_power(spec, p_t);
    std::vector<MetricRecord> out;
    auto emit = [&](const char *metric, double value) {
        MetricRecord r;
        r.experiment = "power";
        r.architecture = std::string(to_string(spec.variant()));
        r.band = band;
        r.p_t_w = p_t;
        r.n_t = spec.n_t();
        r.metric = metric;
        r.value = value;
        out.push_back(std::move(r));
    };
    emit("p_pa_out_w", pb.p_pa_out);
    emit("p_pa_dc_w", pb.p_pa_dc);
    emit("p_rf_chains_w", pb.p_rf_chains);
    emit("p_ima_w", pb.p_ima);
    emit("p_total_w", pb.p_total);
    emit("power_efficiency", pb.efficiency());
    return out;
}

std::vector<MetricRecord> component_records(const ArchitectureSpec &spec, const std::string &band)
{
    const auto c = frontend::count_components(spec);
    std::vector<MetricRecord> out;
    auto emit = [&](const char *metric, int value) {
        MetricRecord r;
        r.experiment = "components";
        r.architecture = std::string(to_string(spec.variant()));
        r.band = band;
        r.n_t = spec.n_t();
        r.metric = metric;
        r.value = value;
        out.push_back(std::move(r));
    };
    emit("lines", c.lines);
    emit("phase_shifters", c.phase_shifters);
    emit("dividers", c.dividers);
    emit("combiners", c.combiners);
    emit("imas", c.imas);
    emit("switches", c.switches);
    return out;
}

} // namespace mimofe::metrics
