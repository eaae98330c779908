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


#include "mimofe/precoder/solve.hpp"
#include "mimofe/precoder/objective.hpp"

#include <Eigen/Cholesky>
#include <Eigen/LU>

#include <cmath>
#include <limits>
#include <stdexcept>

namespace mimofe::precoder {

using frontend::Variant;

double combining_efficiency(const CMat &A, const CMat &B)
{
    const CMat c = B * B.adjoint();
    const double k = static_cast<double>(A.cols());
    const double out = (A * c * A.adjoint()).diagonal().real().sum() / k;
    double in = 0.0;
    for (Eigen::Index m = 0; m < A.rows(); ++m)
        for (Eigen::Index j = 0; j < A.cols(); ++j)
            in += std::norm(A(m, j)) * c(j, j).real();
    return in > 0.0 ? out / in : 1.0;
}

double evm_of(const CMat &E)
{
    const double k = static_cast<double>(E.rows());
    const cplx g = E.trace() / k;
    if (std::abs(g) == 0.0)
        return std::numeric_limits<double>::infinity();
    return (E - g * CMat::Identity(E.rows(), E.cols())).norm() / (std::sqrt(k) * std::abs(g));
}

namespace {

// Regularized inverse M^H (M M^H + lambda I)^-1 scaled so that ||A B||_F^2 = p_t.
CMat regularized(const CMat &A, const CMat &M, double lambda, double p_t)
{
    const Eigen::Index k = M.rows();
    const CMat s = M * M.adjoint() + lambda * CMat::Identity(k, k);
    CMat b = M.adjoint() * s.llt().solve(CMat::Identity(k, k));
    const double pw = (A * b).squaredNorm();
    return b * std::sqrt(p_t / pw);
}

} // namespace

PrecoderSolution solve_digital(const ArchitectureSpec &spec, const CMat &H, const AnalogState &state, double p_t,
                               double evm_target)
{
    if (!(p_t > 0.0))
        throw std::invalid_argument("solve: p_t must be > 0");
    if (!(evm_target >= 0.0))
        throw std::invalid_argument("solve: evm_target must be >= 0");

    PrecoderSolution sol;
    sol.state = state;
    sol.A = frontend::analog_transfer(spec, state);
    const CMat M = H * sol.A;
    const Eigen::Index k = M.rows();
    const double j = objective_j(H, sol.A);
    if (!std::isfinite(j)) {
        sol.objective = j;
        sol.B = CMat::Zero(sol.A.cols(), k);
        return sol;
    }
    sol.feasible = true;

    if (evm_target == 0.0) {
        const double g = std::sqrt(p_t / j);
        if (M.cols() == k) {
            sol.B = g * M.partialPivLu().inverse();
        } else {
            const CMat p = sol.A.adjoint() * sol.A;
            const Eigen::LLT<CMat> pl(p);
            const CMat pm = pl.solve(M.adjoint());
            sol.B = g * pm * (M * pm).llt().solve(CMat::Identity(k, k));
        }
        sol.g_squared = p_t / j;
        sol.objective = j;
        sol.evm = 0.0;
    } else {
        const double scale = M.squaredNorm() / static_cast<double>(k);
        auto evm_at = [&](double lambda) { return evm_of(M * regularized(sol.A, M, lambda, p_t)); };
        double lo = 1e-12 * scale;
        double hi = scale;
        while (evm_at(hi) < evm_target && hi < 1e12 * scale)
            hi *= 4.0;
        double lambda = hi;
        if (evm_at(lo) >= evm_target) {
            lambda = lo;
        } else if (evm_at(hi) >= evm_target) {
            for (int it = 0; it < 200; ++it) {
                lambda = std::sqrt(lo * hi);
                const double e = evm_at(lambda);
                if (std::abs(e / evm_target - 1.0) < 1e-4)
                    break;
                (e < evm_target ? lo : hi) = lambda;
            }
        }
        sol.lambda = lambda;
        sol.B = regularized(sol.A, M, lambda, p_t);
        const CMat e = M * sol.B;
        sol.evm = evm_of(e);
        sol.g_squared = std::norm(e.trace() / static_cast<double>(k));
        sol.objective = p_t / sol.g_squared;
    }

    const CMat e = M * sol.B;
    sol.rx_useful = static_cast<double>(k) * sol.g_squared;
    sol.rx_total = e.squaredNorm();
    if (spec.variant() == Variant::HadbFc)
        sol.combining_efficiency = combining_efficiency(sol.A, sol.B);
    return sol;
}

PrecoderSolution solve(const ArchitectureSpec &spec, const CMat &H, double p_t, double evm_target,
                       const OptimizerConfig &config)
{
    if (!(p_t > 0.0))
        throw std::invalid_argument("solve: p_t must be > 0");
    const AnalogOptimum opt = optimize_analog(spec, H, config);
    return solve_digital(spec, H, opt.state, p_t, evm_target);
}

} // namespace mimofe::precoder
