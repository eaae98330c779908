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


#include "mimofe/metrics/metrics.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace mimofe;
using namespace mimofe::metrics;
using aperture::ElementPattern;
using frontend::build_architecture;
using frontend::RfParams;

namespace {

const RfParams kFr1 = RfParams::preset(frontend::Band::FR1);
const Direction kDir = Direction::from_degrees(10.0, 0.0);

} // namespace

TEST_SUITE("metrics")
{
    TEST_CASE("ideal reference")
    {
        const auto one = aperture::build_ura(1, 1, 0.5);
        const auto cosq = ElementPattern::cosine(1.0);
        const auto d = Direction::from_degrees(30.0, 10.0);
        CHECK(ideal_reference(one, cosq, d).directivity ==
              doctest::Approx(cosq.gain(d.unit_vector().x())).epsilon(1e-3));

        const auto g = aperture::build_ura(8, 8, 0.5);
        const auto iso = ElementPattern::isotropic();
        const auto ref = ideal_reference(g, iso, Direction{});
        const CVec ones = CVec::Ones(64);
        CHECK(ref.directivity ==
              doctest::Approx(64.0 * 64.0 / oracle::isotropic_radiated_power(g.positions, ones)).epsilon(1e-3));

        const auto r = ideal_reference(g, cosq, kDir);
        // radiated power as a quadratic form over the same sphere quadrature
        const auto quad = aperture::SphereQuadrature::for_geometry(g);
        CMat gram = CMat::Zero(64, 64);
        for (std::size_t i = 0; i < quad.size(); ++i) {
            const Vec3 &n = quad.nodes()[i];
            const CVec a = aperture::steering_vector(g, cosq, Direction{std::atan2(n.y(), n.x()), std::asin(n.z())});
            gram.noalias() += quad.weights()[i] / (4.0 * kPi) * a * a.adjoint();
        }
        const CVec a0 = aperture::steering_vector(g, cosq, kDir);
        CHECK(std::norm(a0.dot(r.w)) / (r.w.dot(gram * r.w)).real() == doctest::Approx(r.directivity).epsilon(1e-9));
        Rng rng(123);
        int beaten = 0;
        for (int i = 0; i < 10000; ++i) {
            CVec w(64);
            for (auto &x : w)
                x = rng.complex_normal();
            if (std::norm(a0.dot(w)) / (w.dot(gram * w)).real() > r.directivity)
                ++beaten;
        }
        CHECK(beaten == 0);
    }

    TEST_CASE("steering efficiency references")
    {
        const auto ideal = build_architecture(frontend::Variant::Ideal, 64, 4, kFr1);
        CHECK(steering_efficiency(ideal, kDir, 20.0).se == doctest::Approx(1.0));

        const auto fd = build_architecture(frontend::Variant::FD, 64, 4, kFr1);
        const auto r = steering_efficiency(fd, kDir, 20.0);
        CHECK(r.se == doctest::Approx(20.0 / 173.12).epsilon(1e-9));
        CHECK(r.d_arch == r.d_ideal);
        CHECK_THROWS_AS(steering_efficiency(fd, kDir, 0.0), std::invalid_argument);
    }

    TEST_CASE("steering efficiency bounds and monotonicity")
    {
        for (auto band : {frontend::Band::FR1, frontend::Band::FR2})
            for (auto v : frontend::kCompared) {
                const auto spec = build_architecture(v, 64, 4, RfParams::preset(band));
                double prev = 0.0;
                for (double p : {0.1, 1.0, 10.0, 100.0, 1000.0}) {
                    const auto r = steering_efficiency(spec, kDir, p);
                    CHECK(r.se > 0.0);
                    CHECK(r.se <= 1.0);
                    CHECK(r.d_arch <= r.d_ideal * (1.0 + 1e-9));
                    CHECK(r.se >= prev);
                    CHECK(r.excitation.norm() == doctest::Approx(1.0));
                    prev = r.se;
                }
            }
    }

    TEST_CASE("quantized steering is close to the ideal beam")
    {
        for (auto v : {frontend::Variant::HadbFc, frontend::Variant::HadbPc, frontend::Variant::TaraFi,
                       frontend::Variant::TaraSi}) {
            const auto spec = build_architecture(v, 64, 4, kFr1);
            const auto r = steering_efficiency(spec, kDir, 20.0);
            // 2-bit phase quantization costs at most about 1 dB of gain; illumination taper adds a bit
            CHECK(r.d_arch / r.d_ideal > 0.6);
        }
        // RL picks a grid beam: looking along a beam direction loses only the lens shape
        const auto rl = build_architecture(frontend::Variant::Rl, 64, 4, kFr1);
        const auto on = steering_efficiency(rl, Direction{}, 20.0);
        CHECK(on.d_arch / on.d_ideal > 0.99);
    }

    TEST_CASE("sector average")
    {
        const auto fd = build_architecture(frontend::Variant::FD, 16, 4, kFr1);
        CHECK(steering_efficiency_sector(fd, aperture::Sector{}, 20.0) ==
              doctest::Approx(steering_efficiency(fd, kDir, 20.0).se));
        CHECK_THROWS_AS(steering_efficiency_sector(fd, aperture::Sector{}, 20.0, 0, 3), std::invalid_argument);
    }

    TEST_CASE("steering sweep records")
    {
        SeSweepOptions o;
        o.variants = {frontend::Variant::FD, frontend::Variant::TaraFi};
        o.p_t_grid = {1.0, 10.0};
        o.n_t_grid = {16, 64};
        const auto recs = se_sweep(o, kFr1);
        CHECK(recs.size() == 8);
        for (const auto &r : recs) {
            CHECK(r.experiment == "steereff");
            CHECK(r.metric == "SE");
            CHECK(r.band == "FR1");
            CHECK((r.scenario == "p_t-sweep" || r.scenario == "n_t-sweep"));
        }
        o.p_t_grid.clear();
        o.n_t_grid.clear();
        CHECK_THROWS_AS(se_sweep(o, kFr1), std::invalid_argument);
    }

    TEST_CASE("system loss")
    {
        std::vector<frontend::ArchitectureSpec> specs;
        for (auto v : frontend::kCompared)
            specs.push_back(build_architecture(v, 16, 4, kFr1));
        SystemLossOptions o;
        o.n_realizations = 6;
        o.seed = 9;
        const auto scenario = aperture::ChannelScenario::preset(aperture::ScenarioLabel::UMaLos);
        const auto res = system_loss(specs, scenario, o);
        REQUIRE(res.entries.size() == specs.size());
        CHECK(res.entries[0].sl_rel_db == 0.0);
        for (const auto &e : res.entries) {
            CHECK(e.sl_rel_db <= 1e-9);
            CHECK(e.excluded == 0);
            REQUIRE(e.g_squared.size() == 6);
            for (std::size_t i = 0; i < 6; ++i)
                CHECK(e.g_squared[i] <= res.fd_g_squared[i] * (1.0 + 1e-9));
        }

        // deterministic, thread count does not matter
        o.threads = 3;
        const auto again = system_loss(specs, scenario, o);
        for (std::size_t a = 0; a < specs.size(); ++a)
            CHECK(again.entries[a].g_squared == res.entries[a].g_squared);

        // FD is supplied even when not requested
        const auto only = system_loss({specs[2]}, scenario, o);
        CHECK(only.entries.size() == 1);
        CHECK(only.entries[0].sl_rel_db == doctest::Approx(res.entries[2].sl_rel_db));

        const auto recs = to_records(res, "FR1", 20.0, true);
        CHECK(recs.size() == 2 * specs.size());
        CHECK(std::count_if(recs.begin(), recs.end(), [](const MetricRecord &r) { return r.metric == "SL_rel_db"; }) ==
              static_cast<long>(specs.size()));
        for (const auto &r : recs) {
            CHECK(r.scenario == "UMa-LOS");
            CHECK(r.n_realizations == 6);
            CHECK(r.seed == 9);
        }

        o.n_realizations = 0;
        CHECK_THROWS_AS(system_loss(specs, scenario, o), std::invalid_argument);
    }

    TEST_CASE("power and component records")
    {
        const auto fd = build_architecture(frontend::Variant::FD, 64, 4, kFr1);
        const auto p = power_records(fd, 20.0, "FR1");
        REQUIRE(p.size() == 6);
        CHECK(p[4].metric == "p_total_w");
        CHECK(p[4].value == doctest::Approx(173.12));
        const auto fc = build_architecture(frontend::Variant::HadbFc, 256, 4, kFr1);
        const auto c = component_records(fc, "FR1");
        const auto lines = std::find_if(c.begin(), c.end(), [](const MetricRecord &r) { return r.metric == "lines"; });
        REQUIRE(lines != c.end());
        CHECK(lines->value == 1024.0);
        CHECK(lines->n_t == 256);

        MetricRecord a, b;
        a.architecture = "FD";
        b.architecture = "RL";
        CHECK(record_less(a, b));
        CHECK_FALSE(record_less(b, a));
    }
}
