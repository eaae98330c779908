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


#include "mimofe/precoder/optimizer.hpp"
#include "mimofe/precoder/objective.hpp"
#include "mimofe/random.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace mimofe::precoder {

using frontend::Variant;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kStrict = 1e-12; // relative margin a move must beat

bool improves(double candidate, double incumbent)
{
    if (!std::isfinite(candidate))
        return false;
    if (!std::isfinite(incumbent))
        return true;
    return candidate < incumbent * (1.0 - kStrict);
}

// Incremental J for phase-tuned networks: one coordinate change replaces one row of A.
class PhaseTracker
{
  public:
    PhaseTracker(const ArchitectureSpec &spec, const CMat &H, std::vector<int> phases)
        : spec_(spec), H_(H), phases_(std::move(phases))
    {
        refresh();
    }

    void refresh()
    {
        AnalogState st;
        st.phases = phases_;
        A_ = frontend::analog_transfer(spec_, st);
        M_ = H_ * A_;
        P_ = A_.adjoint() * A_;
        j_ = objective_j_reduced(M_, P_);
    }

    int coordinates() const { return static_cast<int>(phases_.size()); }
    int levels() const { return spec_.phase_levels(); }
    int level(int c) const { return phases_[c]; }
    double objective() const { return j_; }
    const std::vector<int> &phases() const { return phases_; }

    double trial(int c, int lv)
    {
        const int m = frontend::phase_row_index(spec_, c);
        row_ = frontend::phase_row_update(spec_, A_, c, lv);
        Mt_ = M_ + H_.col(m) * (row_ - A_.row(m));
        Pt_ = P_ + row_.adjoint() * row_ - A_.row(m).adjoint() * A_.row(m);
        return objective_j_reduced(Mt_, Pt_);
    }

    void commit(int c, int lv, double j)
    {
        const int m = frontend::phase_row_index(spec_, c);
        row_ = frontend::phase_row_update(spec_, A_, c, lv);
        M_ += H_.col(m) * (row_ - A_.row(m));
        P_ += row_.adjoint() * row_ - A_.row(m).adjoint() * A_.row(m);
        A_.row(m) = row_;
        phases_[c] = lv;
        j_ = j;
    }

  private:
    const ArchitectureSpec &spec_;
    const CMat &H_;
    std::vector<int> phases_;
    CMat A_, M_, P_, Mt_, Pt_;
    CRow row_;
    double j_ = kInf;
};

// Beam-selection objective from the reduced quantities H L and L^H L.
class BeamTracker
{
  public:
    BeamTracker(const ArchitectureSpec &spec, const CMat &H)
    {
        const double amp = db_to_amplitude(-spec.rf().switch_il_db);
        HL_ = amp * (H * spec.fixed_transfer());
        gram_ = (amp * amp) * (spec.fixed_transfer().adjoint() * spec.fixed_transfer());
        k_ = spec.n_rf();
        M_.resize(k_, k_);
        P_.resize(k_, k_);
    }

    int beams() const { return static_cast<int>(HL_.cols()); }

    double evaluate(const std::vector<int> &sel)
    {
        for (int a = 0; a < k_; ++a) {
            M_.col(a) = HL_.col(sel[a]);
            for (int b = 0; b < k_; ++b)
                P_(a, b) = gram_(sel[a], sel[b]);
        }
        return objective_j_reduced(M_, P_);
    }

    // tr((M P^-1 M^H + delta I)^-1) for a partial selection.
    double regularized(const std::vector<int> &sel, double delta) const
    {
        const int n = static_cast<int>(sel.size());
        CMat m(k_, n), p(n, n);
        for (int a = 0; a < n; ++a) {
            m.col(a) = HL_.col(sel[a]);
            for (int b = 0; b < n; ++b)
                p(a, b) = gram_(sel[a], sel[b]);
        }
        Eigen::LLT<CMat> pl(p);
        if (pl.info() != Eigen::Success)
            return kInf;
        const CMat s = m * pl.solve(m.adjoint()) + delta * CMat::Identity(k_, k_);
        return s.llt().solve(CMat::Identity(k_, k_)).trace().real();
    }

    double channel_scale() const { return HL_.squaredNorm() / static_cast<double>(HL_.cols() * k_); }

  private:
    CMat HL_, gram_, M_, P_;
    int k_ = 0;
};

AnalogOptimum swap_descent(BeamTracker &bt, std::vector<int> sel,
                           const OptimizerConfig &config)
{
    AnalogOptimum out;
    double j = bt.evaluate(sel);
    out.trace.push_back(j);
    const int nb = bt.beams();
    for (int sweep = 0; sweep < config.max_iters; ++sweep) {
        bool changed = false;
        const double j_start = j;
        for (std::size_t slot = 0; slot < sel.size(); ++slot) {
            const int cur = sel[slot];
            int best = cur;
            double bj = j;
            for (int b = 0; b < nb; ++b) {
                if (std::find(sel.begin(), sel.end(), b) != sel.end())
                    continue;
                sel[slot] = b;
                const double jb = bt.evaluate(sel);
                if (improves(jb, bj)) {
                    bj = jb;
                    best = b;
                }
            }
            sel[slot] = best;
            if (best != cur) {
                j = bj;
                out.trace.push_back(j);
                changed = true;
            }
        }
        ++out.sweeps;
        if (!changed)
            break;
        if (std::isfinite(j_start) && j_start - j <= config.tol * j_start)
            break;
    }
    std::sort(sel.begin(), sel.end());
    out.state.beam_selection = sel;
    out.objective = j;
    return out;
}

std::vector<int> greedy_selection(const ArchitectureSpec &spec, BeamTracker &bt)
{
    const int k = spec.n_rf();
    const double delta = 1e-3 * bt.channel_scale();
    std::vector<int> sel;
    for (int step = 0; step < k; ++step) {
        int best = -1;
        double bj = kInf;
        for (int b = 0; b < bt.beams(); ++b) {
            if (std::find(sel.begin(), sel.end(), b) != sel.end())
                continue;
            sel.push_back(b);
            const double jb = bt.regularized(sel, delta);
            sel.pop_back();
            if (best < 0 || jb < bj) {
                bj = jb;
                best = b;
            }
        }
        sel.push_back(best);
    }
    return sel;
}

int dominant_user(const CMat &H, int rank)
{
    std::vector<int> order(H.rows());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return H.row(a).squaredNorm() > H.row(b).squaredNorm(); });
    return order[rank % static_cast<int>(order.size())];
}

std::vector<int> cophasing(const ArchitectureSpec &spec, const CMat &H, int user)
{
    const CVec feed_sum = spec.fixed_transfer().rowwise().sum();
    std::vector<int> ph(spec.n_t());
    for (int m = 0; m < spec.n_t(); ++m)
        ph[m] = frontend::quantize_phase(-std::arg(H(user, m) * feed_sum(m)), spec.phase_bits()).index;
    return ph;
}

} // namespace

long long binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > (1LL << 52))
            return std::numeric_limits<long long>::max();
    }
    return r;
}

AnalogState initial_state(const ArchitectureSpec &spec, const CMat &H)
{
    AnalogState st = frontend::zero_state(spec);
    const int k = spec.n_rf();
    const int bits = spec.phase_bits();
    switch (spec.variant()) {
    case Variant::FD:
    case Variant::Ideal: break;
    case Variant::HadbFc:
    case Variant::HadbPc: {
        CMat w;
        try {
            w = zf_weights(H);
        } catch (const RankDeficientError &) {
            w = H.adjoint();
        }
        for (int m = 0; m < spec.n_t(); ++m) {
            if (spec.variant() == Variant::HadbFc)
                for (int c = 0; c < k; ++c)
                    st.phases[m * k + c] = frontend::quantize_phase(std::arg(w(m, c)), bits).index;
            else
                st.phases[m] = frontend::quantize_phase(std::arg(w(m, spec.subarray()[m])), bits).index;
        }
        break;
    }
    case Variant::TaraFi:
    case Variant::TaraSi: st.phases = cophasing(spec, H, dominant_user(H, 0)); break;
    case Variant::Rl: {
        BeamTracker bt(spec, H);
        st.beam_selection = greedy_selection(spec, bt);
        std::sort(st.beam_selection.begin(), st.beam_selection.end());
        break;
    }
    }
    return st;
}

AnalogOptimum descend(const ArchitectureSpec &spec, const CMat &H, const AnalogState &start,
                      const OptimizerConfig &config)
{
    frontend::validate_state(spec, start);
    if (H.rows() != spec.n_rf() || H.cols() != spec.n_t())
        throw std::invalid_argument("descend: channel has the wrong shape for this architecture");

    if (spec.variant() == Variant::Rl) {
        BeamTracker bt(spec, H);
        return swap_descent(bt, start.beam_selection, config);
    }

    AnalogOptimum out;
    if (spec.tunable_phase_count() == 0) {
        out.state = start;
        out.objective = objective_j(H, frontend::analog_transfer(spec, start));
        out.trace.push_back(out.objective);
        return out;
    }

    PhaseTracker t(spec, H, start.phases);
    out.trace.push_back(t.objective());
    for (int sweep = 0; sweep < config.max_iters; ++sweep) {
        if (sweep > 0)
            t.refresh();
        const double j_start = t.objective();
        bool changed = false;
        for (int c = 0; c < t.coordinates(); ++c) {
            const int cur = t.level(c);
            int best = cur;
            double bj = t.objective();
            for (int lv = 0; lv < t.levels(); ++lv) {
                if (lv == cur)
                    continue;
                const double jl = t.trial(c, lv);
                if (improves(jl, bj)) {
                    bj = jl;
                    best = lv;
                }
            }
            if (best != cur) {
                t.commit(c, best, bj);
                out.trace.push_back(bj);
                changed = true;
            }
        }
        ++out.sweeps;
        if (!changed)
            break;
        if (std::isfinite(j_start) && j_start - t.objective() <= config.tol * j_start)
            break;
    }
    out.state.phases = t.phases();
    out.objective = objective_j(H, frontend::analog_transfer(spec, out.state));
    return out;
}

AnalogOptimum exhaustive_beam_search(const ArchitectureSpec &spec, const CMat &H)
{
    if (spec.variant() != Variant::Rl)
        throw std::invalid_argument("exhaustive_beam_search: RL only");
    BeamTracker bt(spec, H);
    const int k = spec.n_rf();
    const int nb = bt.beams();
    std::vector<int> sel(k);
    std::iota(sel.begin(), sel.end(), 0);
    AnalogOptimum out;
    out.objective = kInf;
    out.state.beam_selection = sel;
    while (true) {
        const double j = bt.evaluate(sel);
        if (j < out.objective) {
            out.objective = j;
            out.state.beam_selection = sel;
            out.trace.push_back(j);
        }
        int i = k - 1;
        while (i >= 0 && sel[i] == nb - k + i)
            --i;
        if (i < 0)
            break;
        ++sel[i];
        for (int r = i + 1; r < k; ++r)
            sel[r] = sel[r - 1] + 1;
    }
    out.sweeps = 1;
    if (out.trace.empty())
        out.trace.push_back(kInf);
    return out;
}

AnalogOptimum greedy_beam_search(const ArchitectureSpec &spec, const CMat &H, const OptimizerConfig &config)
{
    if (spec.variant() != Variant::Rl)
        throw std::invalid_argument("greedy_beam_search: RL only");
    BeamTracker bt(spec, H);
    AnalogOptimum best = swap_descent(bt, greedy_selection(spec, bt), config);
    const int nb = bt.beams();
    for (int r = 1; r <= config.restarts; ++r) {
        Rng rng(config.seed, static_cast<std::uint64_t>(r), 0x726c);
        std::vector<int> pool(nb);
        std::iota(pool.begin(), pool.end(), 0);
        for (int i = 0; i < spec.n_rf(); ++i)
            std::swap(pool[i], pool[i + rng.uniform_index(static_cast<std::uint64_t>(nb - i))]);
        pool.resize(spec.n_rf());
        AnalogOptimum cand = swap_descent(bt, pool, config);
        if (improves(cand.objective, best.objective))
            best = std::move(cand);
    }
    return best;
}

AnalogOptimum optimize_analog(const ArchitectureSpec &spec, const CMat &H, const OptimizerConfig &config)
{
    if (H.rows() != spec.n_rf() || H.cols() != spec.n_t())
        throw std::invalid_argument("optimize_analog: channel has the wrong shape for this architecture");

    if (spec.variant() == Variant::Rl) {
        if (binomial(spec.n_beams(), spec.n_rf()) <= config.rl_exhaustive_limit)
            return exhaustive_beam_search(spec, H);
        return greedy_beam_search(spec, H, config);
    }

    const AnalogState init = initial_state(spec, H);
    AnalogOptimum best = descend(spec, H, init, config);
    if (spec.tunable_phase_count() == 0)
        return best;

    const int levels = spec.phase_levels();
    for (int r = 1; r <= config.restarts; ++r) {
        AnalogState start = init;
        if (spec.is_tara())
            start.phases = cophasing(spec, H, dominant_user(H, r));
        Rng rng(config.seed, static_cast<std::uint64_t>(r), 0x7068);
        for (int &p : start.phases)
            if (rng.uniform() < config.restart_perturbation)
                p = static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(levels)));
        AnalogOptimum cand = descend(spec, H, start, config);
        if (improves(cand.objective, best.objective))
            best = std::move(cand);
    }
    return best;
}

} // namespace mimofe::precoder
