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

namespace mimofe::aperture {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendre
{
    std::vector<double> nodes;
    std::vector<double> weights;
};
GaussLegendre gauss_legendre(int n);

/// Deterministic product rule over the unit sphere. The polar axis is the array
/// boresight (+x). Gauss-Legendre in cos(polar) is applied separately on the
/// front and back hemispheres so the pattern cut-off at the array plane falls
/// on a panel boundary; azimuth around the axis uses the periodic trapezoid rule.
class SphereQuadrature
{
  public:
    SphereQuadrature(int n_polar_per_hemisphere, int n_azimuth);

    // Point counts grow with sqrt(N_t) and with the electrical radius of the
    // array so that the band-limited array factor is resolved.
    static SphereQuadrature for_geometry(const ArrayGeometry &geom);

    const std::vector<Vec3> &nodes() const { return nodes_; }
    const std::vector<double> &weights() const { return weights_; }
    std::size_t size() const { return nodes_.size(); }

  private:
    std::vector<Vec3> nodes_;
    std::vector<double> weights_;
};

/// U(dir) = |a(dir)^H w|^2 / (4 pi); for isotropic elements with lambda/2
/// pairwise spacings the sphere integral equals ||w||^2.
/// Throws std::invalid_argument for a zero excitation.
double radiation_intensity(const ArrayGeometry &geom, const ElementPattern &pattern, const CVec &w,
                           const Direction &dir);

/// Sphere integral of the radiation intensity.
double radiated_power(const ArrayGeometry &geom, const ElementPattern &pattern, const CVec &w,
                      const SphereQuadrature &quad);

/// D(dir) = 4 pi U(dir) / integral U.
/// Throws std::invalid_argument for a zero excitation and std::runtime_error if
/// the quadrature yields a non-finite or non-positive total.
double directivity(const ArrayGeometry &geom, const ElementPattern &pattern, const CVec &w, const Direction &dir,
                   const SphereQuadrature &quad);
double directivity(const ArrayGeometry &geom, const ElementPattern &pattern, const CVec &w, const Direction &dir);

} // namespace mimofe::aperture
