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

#include "mimofe/aperture/radiation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mimofe::aperture {

GaussLegendre gauss_legendre(int n)
{
    if (n < 1)
        throw std::invalid_argument("gauss_legendre: n must be >= 1");

    GaussLegendre gl;
    gl.nodes.resize(n);
    gl.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        // Newton on P_n from the usual asymptotic guess.
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 1.0;
        for (int it = 0; it < 100; ++it) {
            double p_prev = 1.0, p = x;
            for (int k = 2; k <= n; ++k) {
                const double p_next = ((2.0 * k - 1.0) * x * p - (k - 1.0) * p_prev) / k;
                p_prev = p;
                p = p_next;
            }
            dp = n * (x * p - p_prev) / (x * x - 1.0);
            const double dx = p / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15)
                break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        gl.nodes[i] = -x;
        gl.nodes[n - 1 - i] = x;
        gl.weights[i] = w;
        gl.weights[n - 1 - i] = w;
    }
    return gl;
}

SphereQuadrature::SphereQuadrature(int n_polar_per_hemisphere, int n_azimuth)
{
    if (n_polar_per_hemisphere < 1 || n_azimuth < 1)
        throw std::invalid_argument("SphereQuadrature: point counts must be >= 1");

    const auto gl = gauss_legendre(n_polar_per_hemisphere);
    const double dphi = kTwoPi / n_azimuth;
    nodes_.reserve(2u * gl.nodes.size() * n_azimuth);
    weights_.reserve(nodes_.capacity());

    for (int hemi = 0; hemi < 2; ++hemi) {
        for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
            // map [-1, 1] onto [0, 1] (front) or [-1, 0] (back)
            const double mu = 0.5 * (gl.nodes[i] + 1.0) - hemi;
            const double wmu = 0.5 * gl.weights[i];
            const double s = std::sqrt(std::max(0.0, 1.0 - mu * mu));
            for (int j = 0; j < n_azimuth; ++j) {
                const double phi = (j + 0.5) * dphi;
                nodes_.emplace_back(mu, s * std::cos(phi), s * std::sin(phi));
                weights_.push_back(wmu * dphi);
            }
        }
    }
}

SphereQuadrature SphereQuadrature::for_geometry(const ArrayGeometry &geom)
{
    const int n_min = static_cast<int>(std::ceil(2.0 * std::sqrt(static_cast<double>(geom.size())))) + 32;
    const int n_band = static_cast<int>(std::ceil(4.0 * kPi * geom.radius())) + 32;
    const int n = std::max(n_min, n_band);
    return SphereQuadrature(n, n);
}

namespace {

void require_nonzero(const CVec &w)
{
    if (w.size() == 0 || w.squaredNorm() == 0.0)
        throw std::invalid_argument("excitation vector must be nonzero");
}

// |a(u)^H w|^2 without materialising a(u).
double projected_power(const ArrayGeometry &geom, const ElementPattern &pattern, const CVec &w, const Vec3 &u)
{
    const double g = pattern.gain(u.x());
    if (g == 0.0)
        return 0.0;
    cplx acc = 0.0;
    for (int m = 0; m < geom.size(); ++m)
        acc += unit_phasor(-kTwoPi * geom.positions[m].dot(u)) * w[m];
    return g * std::norm(acc);
}

} // namespace

double radiation_intensity(const ArrayGeometry &geom, const ElementPattern &pattern, const CVec &w,
                           const Direction &dir)
{
    require_nonzero(w);
    if (w.size() != geom.size())
        throw std::invalid_argument("radiation_intensity: excitation length != element count");
    return projected_power(geom, pattern, w, dir.unit_vector()) / (4.0 * kPi);
}

double radiated_power(const ArrayGeometry &geom, const ElementPattern &pattern, const CVec &w,
                      const SphereQuadrature &quad)
{
    require_nonzero(w);
    if (w.size() != geom.size())
        throw std::invalid_argument("radiated_power: excitation length != element count");
    double total = 0.0;
    const auto &nodes = quad.nodes();
    const auto &weights = quad.weights();
    for (std::size_t i = 0; i < nodes.size(); ++i)
        total += weights[i] * projected_power(geom, pattern, w, nodes[i]);
    return total / (4.0 * kPi);
}

double directivity(const ArrayGeometry &geom, const ElementPattern &pattern, const CVec &w, const Direction &dir,
                   const SphereQuadrature &quad)
{
    const double u = radiation_intensity(geom, pattern, w, dir);
    const double total = radiated_power(geom, pattern, w, quad);
    if (!std::isfinite(total) || !(total > 0.0) || !std::isfinite(u))
        throw std::runtime_error("directivity: sphere quadrature produced a non-finite or zero total");
    return 4.0 * kPi * u / total;
}

double directivity(const ArrayGeometry &geom, const ElementPattern &pattern, const CVec &w, const Direction &dir)
{
    return directivity(geom, pattern, w, dir, SphereQuadrature::for_geometry(geom));
}

} // namespace mimofe::aperture
