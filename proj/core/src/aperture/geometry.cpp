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

#include "mimofe/aperture/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace mimofe::aperture {

double ArrayGeometry::radius() const
{
    double r = 0.0;
    for (const auto &p : positions)
        r = std::max(r, p.norm());
    return r;
}

ArrayGeometry build_ura(int n_horizontal, int n_vertical, double spacing)
{
    if (n_horizontal < 1 || n_vertical < 1)
        throw std::invalid_argument("build_ura: element counts must be >= 1");
    if (!(spacing > 0.0))
        throw std::invalid_argument("build_ura: spacing must be positive");

    ArrayGeometry g;
    g.n_horizontal = n_horizontal;
    g.n_vertical = n_vertical;
    g.spacing = spacing;
    g.positions.reserve(static_cast<std::size_t>(n_horizontal) * n_vertical);

    const double y0 = 0.5 * (n_horizontal - 1) * spacing;
    const double z0 = 0.5 * (n_vertical - 1) * spacing;
    for (int ih = 0; ih < n_horizontal; ++ih)
        for (int iv = 0; iv < n_vertical; ++iv)
            g.positions.emplace_back(0.0, ih * spacing - y0, iv * spacing - z0);
    return g;
}

double ElementPattern::gain(double cos_theta) const
{
    if (kind == Kind::isotropic)
        return 1.0;
    if (cos_theta <= 0.0)
        return 0.0;
    return 2.0 * (q + 1.0) * std::pow(cos_theta, q);
}

CVec steering_vector(const ArrayGeometry &geom, const ElementPattern &pattern, const Vec3 &unit)
{
    const double amp = std::sqrt(pattern.gain(unit.x()));
    CVec a(geom.size());
    for (int m = 0; m < geom.size(); ++m)
        a[m] = amp * unit_phasor(kTwoPi * geom.positions[m].dot(unit));
    return a;
}

CVec steering_vector(const ArrayGeometry &geom, const ElementPattern &pattern, const Direction &dir)
{
    return steering_vector(geom, pattern, dir.unit_vector());
}

} // namespace mimofe::aperture
