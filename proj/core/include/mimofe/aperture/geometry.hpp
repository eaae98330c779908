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

#include <vector>

namespace mimofe::aperture {

/// Angular direction seen from the array. Azimuth is measured in the horizontal
/// (x-y) plane from the boresight axis +x towards +y, elevation from that plane
/// towards +z.
struct Direction
{
    double azimuth = 0.0;   // (-pi, pi]
    double elevation = 0.0; // [-pi/2, pi/2]

    static Direction from_degrees(double azimuth_deg, double elevation_deg)
    {
        return {deg_to_rad(azimuth_deg), deg_to_rad(elevation_deg)};
    }

    Vec3 unit_vector() const
    {
        const double ce = std::cos(elevation);
        return {ce * std::cos(azimuth), ce * std::sin(azimuth), std::sin(elevation)};
    }

    bool operator==(const Direction &) const = default;
};

/// Planar array in the y-z plane with boresight along +x. Coordinates are in
/// wavelengths. Element m sits at column m / n_vertical (along y) and row
/// m % n_vertical (along z).
struct ArrayGeometry
{
    std::vector<Vec3> positions;
    int n_horizontal = 0;
    int n_vertical = 0;
    double spacing = 0.5;

    int size() const { return static_cast<int>(positions.size()); }
    double width() const { return n_horizontal * spacing; }
    double height() const { return n_vertical * spacing; }
    // Largest distance of any element from the origin.
    double radius() const;
};

/// Uniform rectangular array centred on the origin.
/// Throws std::invalid_argument for non-positive counts or spacing.
ArrayGeometry build_ura(int n_horizontal, int n_vertical, double spacing);

/// Element power gain relative to an isotropic radiator.
struct ElementPattern
{
    enum class Kind { isotropic, cosine_power };

    Kind kind = Kind::cosine_power;
    double q = 1.0;

    static ElementPattern isotropic() { return {Kind::isotropic, 0.0}; }
    static ElementPattern cosine(double q) { return {Kind::cosine_power, q}; }

    // cos_theta is the cosine of the angle off the element boresight.
    // cosine_power: 2(q+1) cos^q(theta) in front, 0 behind.
    double gain(double cos_theta) const;

    bool operator==(const ElementPattern &) const = default;
};

/// Entry m = sqrt(G(dir)) * exp(+j 2 pi <p_m, u(dir)>).
CVec steering_vector(const ArrayGeometry &geom, const ElementPattern &pattern, const Direction &dir);

/// Steering vector for an arbitrary unit vector (used by the quadrature).
CVec steering_vector(const ArrayGeometry &geom, const ElementPattern &pattern, const Vec3 &unit);

} // namespace mimofe::aperture
