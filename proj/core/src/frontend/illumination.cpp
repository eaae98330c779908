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

#include "mimofe/frontend/illumination.hpp"
#include "mimofe/aperture/radiation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace mimofe::frontend {

double feed_exponent_for_edge_taper(double focal_distance, double half_width, double edge_taper_db)
{
    if (!(focal_distance > 0.0) || !(half_width > 0.0))
        throw std::invalid_argument("feed_exponent_for_edge_taper: distances must be positive");
    if (!(edge_taper_db < 0.0))
        throw std::invalid_argument("feed_exponent_for_edge_taper: taper must be negative dB");
    const double c = std::cos(std::atan(half_width / focal_distance));
    // cos^q(psi) from the feed pattern, cos^2(psi) from the longer path to the edge
    const double q = std::log(db_to_power(edge_taper_db)) / std::log(c) - 2.0;
    return std::max(0.0, q);
}

CMat illumination_matrix(const Illuminator &illum, const aperture::ArrayGeometry &geom, int cell_points)
{
    if (cell_points < 1)
        throw std::invalid_argument("illumination_matrix: cell_points must be >= 1");
    const int n_t = geom.size();
    const int n_feeds = static_cast<int>(illum.feeds.size());
    const auto feed_pattern = aperture::ElementPattern::cosine(illum.q);
    const auto gl = aperture::gauss_legendre(cell_points);
    const double half = 0.5 * geom.spacing;

    CMat g = CMat::Zero(n_t, n_feeds);
    for (int k = 0; k < n_feeds; ++k) {
        const Feed &f = illum.feeds[k];
        if (!(f.position.x() > 0.0))
            throw std::invalid_argument("illumination_matrix: feed " + std::to_string(k) +
                                        " is not in front of the array");
        const Vec3 aim = f.aim.normalized();

        std::vector<int> all;
        const std::vector<int> *elems = &all;
        if (k < static_cast<int>(illum.coverage.size()) && !illum.coverage[k].empty()) {
            elems = &illum.coverage[k];
        } else {
            all.resize(n_t);
            for (int m = 0; m < n_t; ++m)
                all[m] = m;
        }

        for (int m : *elems) {
            const Vec3 &p = geom.positions[m];
            const double d = (p - f.position).norm();
            if (d < 1e-9)
                throw std::invalid_argument("illumination_matrix: feed coincides with an element");

            double captured = 0.0;
            for (int iy = 0; iy < cell_points; ++iy) {
                for (int iz = 0; iz < cell_points; ++iz) {
                    const Vec3 r = p + Vec3(0.0, half * gl.nodes[iy], half * gl.nodes[iz]);
                    const Vec3 v = r - f.position;
                    const double dist = v.norm();
                    const double cos_feed = v.dot(aim) / dist;
                    const double cos_elem = -v.x() / dist;
                    if (cos_elem <= 0.0)
                        continue;
                    captured += gl.weights[iy] * gl.weights[iz] * feed_pattern.gain(cos_feed) * cos_elem /
                                (4.0 * kPi * dist * dist);
                }
            }
            captured *= half * half;
            g(m, k) = std::sqrt(captured) * unit_phasor(-kTwoPi * d);
        }
    }
    return g;
}

namespace {

struct Box
{
    double y_min = std::numeric_limits<double>::infinity();
    double y_max = -std::numeric_limits<double>::infinity();
    double z_min = std::numeric_limits<double>::infinity();
    double z_max = -std::numeric_limits<double>::infinity();
};

Box bounding_box(const aperture::ArrayGeometry &geom, const std::vector<int> &elements)
{
    Box b;
    for (int m : elements) {
        const Vec3 &p = geom.positions[m];
        b.y_min = std::min(b.y_min, p.y());
        b.y_max = std::max(b.y_max, p.y());
        b.z_min = std::min(b.z_min, p.z());
        b.z_max = std::max(b.z_max, p.z());
    }
    return b;
}

} // namespace

Illuminator focused_feed(const aperture::ArrayGeometry &geom, const std::vector<int> &elements, double focal_ratio,
                         double edge_taper_db)
{
    if (elements.empty())
        throw std::invalid_argument("focused_feed: no elements");
    const Box b = bounding_box(geom, elements);
    const double width =
        std::max(b.y_max - b.y_min, b.z_max - b.z_min) + geom.spacing; // element cells included
    const double focal = focal_ratio * width;

    Illuminator il;
    il.q = feed_exponent_for_edge_taper(focal, 0.5 * width, edge_taper_db);
    il.feeds.push_back({Vec3(focal, 0.5 * (b.y_min + b.y_max), 0.5 * (b.z_min + b.z_max)), -Vec3::UnitX()});
    il.coverage.push_back(elements);
    return il;
}

Illuminator full_illumination_layout(const aperture::ArrayGeometry &geom, int n_feeds, double square_side,
                                     double focal_ratio, double edge_taper_db)
{
    const int r = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n_feeds))));
    if (n_feeds < 1 || r * r != n_feeds)
        throw std::invalid_argument("full_illumination_layout: feed count must be a perfect square");
    const double width = std::max(geom.width(), geom.height());
    const double focal = focal_ratio * width;

    Illuminator il;
    il.q = feed_exponent_for_edge_taper(focal, 0.5 * width, edge_taper_db);
    const double pitch = r > 1 ? square_side / (r - 1) : 0.0;
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) {
            const Vec3 pos(focal, (i - 0.5 * (r - 1)) * pitch, (j - 0.5 * (r - 1)) * pitch);
            il.feeds.push_back({pos, (-pos).normalized()});
        }
    }
    il.coverage.assign(n_feeds, {});
    return il;
}

Illuminator separate_illumination_layout(const aperture::ArrayGeometry &geom, const std::vector<int> &subarray,
                                         int n_feeds, double focal_ratio, double edge_taper_db)
{
    Illuminator il;
    for (int k = 0; k < n_feeds; ++k) {
        std::vector<int> elems;
        for (int m = 0; m < static_cast<int>(subarray.size()); ++m)
            if (subarray[m] == k)
                elems.push_back(m);
        Illuminator one = focused_feed(geom, elems, focal_ratio, edge_taper_db);
        il.q = one.q;
        il.feeds.push_back(one.feeds.front());
        il.coverage.push_back(std::move(elems));
    }
    return il;
}

} // namespace mimofe::frontend
