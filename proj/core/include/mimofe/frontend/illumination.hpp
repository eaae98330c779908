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

/// Feed antenna of a transmit/reflect array. Coordinates in wavelengths.
struct Feed
{
    Vec3 position = Vec3::Zero();
    Vec3 aim = -Vec3::UnitX(); // unit vector of the feed boresight
};

/// Set of illuminators with a common cos^q feed pattern. coverage[k] lists the
/// elements feed k reaches; an empty list means the whole aperture.
struct Illuminator
{
    std::vector<Feed> feeds;
    double q = 0.0;
    std::vector<std::vector<int>> coverage;
};

/// Exponent q of a cos^q feed whose power at the aperture edge (feed pattern and
/// spherical spreading combined) is edge_taper_db below the centre.
double feed_exponent_for_edge_taper(double focal_distance, double half_width, double edge_taper_db);

/// Free-space link from every feed to every element cell.
///   |G_mk|^2 = integral over cell m of G_feed(psi) cos(psi') / (4 pi d^2) dA
///   arg G_mk = -2 pi d_mk (centre-to-centre distance)
/// The column power sum is the fraction of feed power captured by the aperture.
/// Throws std::invalid_argument if a feed sits behind or on the array plane or
/// coincides with an element.
CMat illumination_matrix(const Illuminator &illum, const aperture::ArrayGeometry &geom, int cell_points = 6);

/// Single feed centred on the given elements at focal_ratio times the
/// sub-aperture width, edge taper as requested.
Illuminator focused_feed(const aperture::ArrayGeometry &geom, const std::vector<int> &elements, double focal_ratio,
                         double edge_taper_db);

/// Full-illumination layout: n_feeds feeds on a square of side `square_side`
/// in the focal plane at focal_ratio times the aperture width, all aimed at the
/// aperture centre. n_feeds must be a perfect square.
Illuminator full_illumination_layout(const aperture::ArrayGeometry &geom, int n_feeds, double square_side,
                                     double focal_ratio, double edge_taper_db);

/// Separate-illumination layout: one focused feed per subarray, no cross
/// illumination.
Illuminator separate_illumination_layout(const aperture::ArrayGeometry &geom, const std::vector<int> &subarray,
                                         int n_feeds, double focal_ratio, double edge_taper_db);

} // namespace mimofe::frontend
