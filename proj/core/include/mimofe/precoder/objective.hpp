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

#include "mimofe/types.hpp"

#include <stdexcept>

namespace mimofe::precoder {

class RankDeficientError : public std::runtime_error
{
  public:
    RankDeficientError(const std::string &what, double condition_number)
        : std::runtime_error(what), condition_number_(condition_number)
    {
    }
    double condition_number() const { return condition_number_; }

  private:
    double condition_number_;
};

// Condition numbers above this count as rank deficient.
inline constexpr double kMaxCondition = 1e10;

double condition_number(const CMat &m);

// W = H^H (H H^H)^-1, so that H W = I.
CMat zf_weights(const CMat &H);

// Transmit power of unit-gain zero forcing through the analog network A:
// J = tr((M P^-1 M^H)^-1) with M = H A and P = A^H A, i.e. ||A (H A)^-1||_F^2 for square H A.
// Returns +inf when H A is (numerically) singular.
double objective_j(const CMat &H, const CMat &A);

// Same objective from precomputed M = H A and P = A^H A.
double objective_j_reduced(const CMat &M, const CMat &P);

} // namespace mimofe::precoder
