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


#include "mimofe/precoder/objective.hpp"

#include <Eigen/Cholesky>
#include <Eigen/LU>
#include <Eigen/SVD>

#include <cmath>
#include <limits>
#include <string>

namespace mimofe::precoder {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kMinRcond = 1e-12;
} // namespace

double condition_number(const CMat &m)
{
    if (m.size() == 0)
        return kInf;
    Eigen::JacobiSVD<CMat> svd(m);
    const auto &s = svd.singularValues();
    const double lo = s(s.size() - 1);
    if (!(lo > 0.0))
        return kInf;
    return s(0) / lo;
}

CMat zf_weights(const CMat &H)
{
    if (H.rows() == 0 || H.rows() > H.cols())
        throw RankDeficientError("zf_weights: H has more rows than columns", kInf);
    const double cond = condition_number(H);
    if (!(cond < kMaxCondition))
        throw RankDeficientError("zf_weights: rank-deficient channel, condition number " + std::to_string(cond),
                                 cond);
    const CMat gram = H * H.adjoint();
    return H.adjoint() * gram.llt().solve(CMat::Identity(H.rows(), H.rows()));
}

double objective_j_reduced(const CMat &M, const CMat &P)
{
    const Eigen::Index k = M.rows();
    if (k == 0 || M.cols() < k)
        return kInf;
    if (M.cols() == k) {
        Eigen::PartialPivLU<CMat> lu(M);
        if (!(lu.rcond() > kMinRcond))
            return kInf;
        const CMat x = lu.inverse();
        const double j = (x.adjoint() * P * x).trace().real();
        return std::isfinite(j) && j > 0.0 ? j : kInf;
    }
    Eigen::LLT<CMat> pl(P);
    if (pl.info() != Eigen::Success)
        return kInf;
    const CMat s = M * pl.solve(M.adjoint());
    Eigen::LLT<CMat> sl(s);
    if (sl.info() != Eigen::Success)
        return kInf;
    // Cholesky succeeds on nearly singular matrices; guard with the diagonal ratio.
    const auto d = sl.matrixLLT().diagonal().real();
    if (!(d.minCoeff() > std::sqrt(kMinRcond) * d.maxCoeff()))
        return kInf;
    const double j = sl.solve(CMat::Identity(k, k)).trace().real();
    return std::isfinite(j) && j > 0.0 ? j : kInf;
}

double objective_j(const CMat &H, const CMat &A)
{
    if (H.cols() != A.rows())
        throw std::invalid_argument("objective_j: H and A are not compatible");
    for (Eigen::Index c = 0; c < A.cols(); ++c)
        if (A.col(c).squaredNorm() == 0.0)
            return kInf;
    return objective_j_reduced(H * A, A.adjoint() * A);
}

} // namespace mimofe::precoder
