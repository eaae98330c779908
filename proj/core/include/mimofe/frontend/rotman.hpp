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

#include <vector>

namespace mimofe::frontend {

/// Beam directions (as sines) of an n_beams lens: uniform in sine space over
/// [-sin(theta_max), sin(theta_max)].
std::vector<double> lens_beam_sines(int n_beams, double theta_max);

/// Single planar lens: n_ports x n_beams. Column b is the true-time-delay phase
/// front exp(-j 2 pi m spacing sin(theta_b)) / sqrt(n_ports), scaled by the
/// insertion-loss amplitude.
CMat rotman_lens_1d(int n_ports, int n_beams, double spacing, double theta_max, double lens_il_db);

/// Lens network of the array. A 2-D array uses two stacked lenses (horizontal
/// outer, vertical inner, matching the element order) and offers n_beams^2
/// beams with both insertion losses; a linear array uses one lens.
/// Throws std::invalid_argument if n_ports does not match the array's axes.
CMat rotman_beam_matrix(int n_ports, int n_beams, const aperture::ArrayGeometry &geom, double theta_max,
                        double lens_il_db);

} // namespace mimofe::frontend
