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

#include "mimofe/frontend/rotman.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <unsupported/Eigen/KroneckerProduct>

namespace mimofe::frontend {

std::vector<double> lens_beam_sines(int n_beams, double theta_max)
{
    if (n_beams < 1)
        throw std::invalid_argument("lens_beam_sines: n_beams must be >= 1");
    std::vector<double> s(n_beams, 0.0);
    const double smax = std::sin(theta_max);
    for (int b = 0; b < n_beams && n_beams > 1; ++b)
        s[b] = smax * (-1.0 + 2.0 * b / (n_beams - 1));
    return s;
}

CMat rotman_lens_1d(int n_ports, int n_beams, double spacing, double theta_max, double lens_il_db)
{
    if (n_ports < 1 || n_beams < 1)
        throw std::invalid_argument("rotman_lens_1d: port and beam counts must be >= 1");
    const auto sines = lens_beam_sines(n_beams, theta_max);
    const double amp = db_to_amplitude(-lens_il_db) / std::sqrt(static_cast<double>(n_ports));
    CMat l(n_ports, n_beams);
    for (int m = 0; m < n_ports; ++m)
        for (int b = 0; b < n_beams; ++b)
            l(m, b) = amp * unit_phasor(-kTwoPi * m * spacing * sines[b]);
    return l;
}

CMat rotman_beam_matrix(int n_ports, int n_beams, const aperture::ArrayGeometry &geom, double theta_max,
                        double lens_il_db)
{
    const int nh = geom.n_horizontal;
    const int nv = geom.n_vertical;
    if (nh * nv != geom.size())
        throw std::invalid_argument("rotman_beam_matrix: geometry is not a rectangular grid");
    if (n_beams < 1)
        throw std::invalid_argument("rotman_beam_matrix: n_beams must be >= 1");

    if (nh > 1 && nv > 1) {
        if (n_ports != nh || n_ports != nv)
            throw std::invalid_argument("rotman_beam_matrix: " + std::to_string(n_ports) +
                                        "-port lenses cannot feed a " + std::to_string(nh) + "x" +
                                        std::to_string(nv) + " array");
        const CMat lh = rotman_lens_1d(nh, n_beams, geom.spacing, theta_max, lens_il_db);
        const CMat lv = rotman_lens_1d(nv, n_beams, geom.spacing, theta_max, lens_il_db);
        return Eigen::kroneckerProduct(lh, lv).eval();
    }
    const int n = std::max(nh, nv);
    if (n_ports != n)
        throw std::invalid_argument("rotman_beam_matrix: lens port count does not match the linear array");
    return rotman_lens_1d(n, n_beams, geom.spacing, theta_max, lens_il_db);
}

} // namespace mimofe::frontend
