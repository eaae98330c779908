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
#include "mimofe/frontend/architecture.hpp"
#include "mimofe/frontend/illumination.hpp"
#include "mimofe/frontend/power.hpp"
#include "mimofe/frontend/rotman.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <array>
#include <numeric>

using namespace mimofe;
using namespace mimofe::frontend;

namespace {

const RfParams kFr1 = RfParams::preset(Band::FR1);

double wrap_distance(double a, double b)
{
    const double d = std::fmod(std::abs(a - b), kTwoPi);
    return std::min(d, kTwoPi - d);
}

AnalogState random_state(const ArchitectureSpec &spec, Rng &rng)
{
    AnalogState st = zero_state(spec);
    for (int &p : st.phases)
        p = static_cast<int>(rng.uniform_index(spec.phase_levels()));
    if (spec.variant() == Variant::Rl) {
        std::vector<int> pool(spec.n_beams());
        std::iota(pool.begin(), pool.end(), 0);
        for (int i = 0; i < spec.n_rf(); ++i)
            std::swap(pool[i], pool[i + rng.uniform_index(pool.size() - i)]);
        st.beam_selection.assign(pool.begin(), pool.begin() + spec.n_rf());
    }
    return st;
}

// Captured fraction of a cos^q feed by angular integration over the rays that hit the aperture rectangle.
double captured_by_rays(const Feed &f, double q, double half_w, double half_h)
{
    const auto pat = aperture::ElementPattern::cosine(q);
    const Vec3 axis = -Vec3::UnitX();
    const Vec3 e1 = Vec3::UnitY(), e2 = Vec3::UnitZ();
    const double theta_max = std::atan(std::hypot(half_w + std::abs(f.position.y()), half_h + std::abs(f.position.z())) /
                                       f.position.x());
    const int nt = 3000, np = 3000;
    const double dt = theta_max / nt, dp = kTwoPi / np;
    double s = 0.0;
    for (int i = 0; i < nt; ++i) {
        const double t = (i + 0.5) * dt;
        for (int j = 0; j < np; ++j) {
            const double p = (j + 0.5) * dp;
            const Vec3 u = std::cos(t) * axis + std::sin(t) * (std::cos(p) * e1 + std::sin(p) * e2);
            const double tt = f.position.x() / -u.x();
            const Vec3 hit = f.position + tt * u;
            if (std::abs(hit.y()) <= half_w && std::abs(hit.z()) <= half_h)
                s += pat.gain(u.dot(f.aim.normalized())) * std::sin(t);
        }
    }
    return s * dt * dp / (4.0 * kPi);
}

} // namespace

TEST_SUITE("frontend")
{
    TEST_CASE("quantizer examples")
    {
        CHECK(quantize_phase(0.3 * kPi, 2).value == doctest::Approx(kPi / 2));
        CHECK(quantize_phase(kPi, 2).index == 2);
        CHECK(quantize_phase(1.9 * kPi, 2).index == 0);
        CHECK(quantize_phase(-0.1, 2).index == 0);
        CHECK(quantize_phase(kPi / 4, 2).index == 0);          // tie -> lower index
        CHECK(quantize_phase(3 * kPi / 4, 2).index == 1);      // tie -> lower index
        CHECK(quantize_phase(7 * kPi / 4, 2).index == 0);      // tie across the wrap -> 0
        CHECK_THROWS_AS(quantize_phase(0.0, 0), std::invalid_argument);
    }

    TEST_CASE("quantizer idempotence and error bound")
    {
        Rng rng(21);
        for (int bits = 1; bits <= 6; ++bits) {
            double worst = 0.0;
            for (int i = 0; i < 20000; ++i) {
                const double phi = rng.uniform(-20.0, 20.0);
                const auto q = quantize_phase(phi, bits);
                CHECK(q.index >= 0);
                CHECK(q.index < (1 << bits));
                const auto qq = quantize_phase(q.value, bits);
                CHECK(qq.index == q.index);
                worst = std::max(worst, wrap_distance(phi, q.value));
            }
            CHECK(worst <= kPi / (1 << bits) + 1e-12);
        }
    }

    TEST_CASE("architecture construction")
    {
        const auto fd = build_architecture(Variant::FD, 64, 4, kFr1);
        CHECK(fd.tunable_phase_count() == 0);
        CHECK(fd.rf_chain_count() == 64);

        const auto pc = build_architecture(Variant::HadbPc, 64, 4, kFr1);
        CHECK(pc.tunable_phase_count() == 64);
        std::array<int, 4> sizes{};
        for (int s : pc.subarray())
            ++sizes.at(s);
        CHECK(sizes == std::array<int, 4>{16, 16, 16, 16});
        // square 4x4 blocks
        for (int m = 0; m < 64; ++m) {
            const int ih = m / 8, iv = m % 8;
            CHECK(pc.subarray()[m] == (ih / 4) * 2 + iv / 4);
        }

        const auto fc = build_architecture(Variant::HadbFc, 64, 4, kFr1);
        CHECK(fc.tunable_phase_count() == 256);

        const auto rl = build_architecture(Variant::Rl, 64, 4, kFr1);
        CHECK(rl.n_beams() == 25);
        CHECK(rl.fixed_transfer().rows() == 64);
        CHECK(rl.tunable_phase_count() == 0);

        const auto fi = build_architecture(Variant::TaraFi, 64, 4, kFr1);
        CHECK(fi.fixed_transfer().cols() == 4);
        CHECK(fi.tunable_phase_count() == 64);

        CHECK_THROWS_AS(build_architecture(Variant::HadbPc, 64, 3, kFr1), std::invalid_argument);
        CHECK_THROWS_AS(build_architecture(Variant::TaraSi, 64, 5, kFr1), std::invalid_argument);
        CHECK_THROWS_AS(build_architecture(Variant::Rl, 64, 26, kFr1), std::invalid_argument);
        CHECK_THROWS_AS(build_architecture(Variant::HadbFc, 60, 4, kFr1), std::invalid_argument);
        RfParams bad = kFr1;
        bad.eta_pae = 1.5;
        CHECK_THROWS_AS(build_architecture(Variant::FD, 64, 4, bad), std::invalid_argument);
    }

    TEST_CASE("labels")
    {
        for (auto v : kCompared)
            CHECK(parse_variant(to_string(v)) == v);
        CHECK(to_string(Variant::HadbFc) == "HADB-FC");
        CHECK_FALSE(parse_variant("HADB_FC").has_value());
        CHECK(parse_band("FR2") == Band::FR2);
    }

    TEST_CASE("band presets")
    {
        const auto r1 = RfParams::preset(Band::FR1);
        CHECK(r1.p_rf_chain == 2.08);
        CHECK(r1.eta_pae == 0.5);
        CHECK(r1.ps_loss_db == 1.0);
        CHECK(r1.phase_bits == 2);
        const auto r2 = RfParams::preset(Band::FR2);
        CHECK(r2.band == Band::FR2);
        CHECK(r2.ps_loss_db == 2.0);
        CHECK(r2.lens_il_db == 3.0);
        CHECK(r2.switch_il_db == 1.5);
    }

    TEST_CASE("analog transfer examples")
    {
        const auto fc = build_architecture(Variant::HadbFc, 64, 4, kFr1);
        const CMat a = analog_transfer(fc, zero_state(fc));
        CVec in = CVec::Zero(4);
        in(0) = 1.0;
        const CVec x = a * in;
        const double expect = kFr1.ps_amplitude() / 8.0;
        for (int m = 0; m < 64; ++m)
            CHECK(std::abs(x(m) - cplx(expect, 0.0)) < 1e-14);

        const auto pc = build_architecture(Variant::HadbPc, 64, 4, kFr1);
        const CMat ap = analog_transfer(pc, zero_state(pc));
        for (int m = 0; m < 64; ++m)
            CHECK((std::abs(ap(m, 1)) > 0.0) == (pc.subarray()[m] == 1));
        CHECK(ap.col(1).squaredNorm() == doctest::Approx(kFr1.ps_amplitude() * kFr1.ps_amplitude()));

        const auto rl = build_architecture(Variant::Rl, 64, 4, kFr1);
        AnalogState st;
        st.beam_selection = {0, 6, 12, 18};
        const CMat ar = analog_transfer(rl, st);
        const double sw = db_to_amplitude(-kFr1.switch_il_db);
        for (int c = 0; c < 4; ++c)
            CHECK((ar.col(c) - sw * rl.fixed_transfer().col(st.beam_selection[c])).norm() < 1e-15);

        const auto fd = build_architecture(Variant::FD, 64, 4, kFr1);
        CHECK(analog_transfer(fd, zero_state(fd)) == CMat::Identity(64, 64));

        AnalogState wrong = zero_state(fc);
        wrong.phases.pop_back();
        CHECK_THROWS_AS(analog_transfer(fc, wrong), std::invalid_argument);
        st.beam_selection = {0, 0, 1, 2};
        CHECK_THROWS_AS(analog_transfer(rl, st), std::invalid_argument);
        st.beam_selection = {0, 1, 2, 25};
        CHECK_THROWS_AS(analog_transfer(rl, st), std::invalid_argument);
    }

    TEST_CASE("passivity")
    {
        Rng rng(77);
        for (auto band : {Band::FR1, Band::FR2}) {
            for (auto v : kCompared) {
                for (int n_t : {16, 64}) {
                    const auto spec = build_architecture(v, n_t, 4, RfParams::preset(band));
                    for (int i = 0; i < 20; ++i) {
                        const CMat a = analog_transfer(spec, random_state(spec, rng));
                        for (int c = 0; c < a.cols(); ++c)
                            CHECK(a.col(c).squaredNorm() <= 1.0 + 1e-12);
                    }
                }
            }
        }
    }

    TEST_CASE("phase row update agrees with the full transfer")
    {
        Rng rng(5);
        for (auto v : {Variant::HadbFc, Variant::HadbPc, Variant::TaraFi, Variant::TaraSi}) {
            const auto spec = build_architecture(v, 16, 4, kFr1);
            AnalogState st = random_state(spec, rng);
            const CMat a = analog_transfer(spec, st);
            for (int c = 0; c < spec.tunable_phase_count(); c += 3) {
                AnalogState s2 = st;
                s2.phases[c] = (s2.phases[c] + 1) % spec.phase_levels();
                const CMat a2 = analog_transfer(spec, s2);
                const int m = phase_row_index(spec, c);
                CHECK((a2.row(m) - phase_row_update(spec, a, c, s2.phases[c])).norm() < 1e-14);
            }
        }
    }

    TEST_CASE("illumination phase and distance law")
    {
        const auto one = aperture::build_ura(1, 1, 0.5);
        const double f = 3.3;
        Illuminator il;
        il.q = 4.0;
        il.feeds.push_back({Vec3(f, 0.0, 0.0), -Vec3::UnitX()});
        const CMat g1 = illumination_matrix(il, one, 8);
        CHECK(wrap_distance(std::arg(g1(0, 0)), -kTwoPi * f) < 1e-9);

        il.feeds[0].position.x() = 2.0 * f;
        const CMat g2 = illumination_matrix(il, one, 8);
        CHECK(std::abs(g2(0, 0)) / std::abs(g1(0, 0)) == doctest::Approx(0.5).epsilon(0.01));

        il.feeds[0].position = Vec3(-1.0, 0.0, 0.0);
        CHECK_THROWS_AS(illumination_matrix(il, one), std::invalid_argument);
    }

    TEST_CASE("spillover matches ray integration")
    {
        const auto g = aperture::build_ura(8, 8, 0.5);
        const auto fi = build_architecture(Variant::TaraFi, g, 4, kFr1);
        const auto &il = fi.illuminator();
        // golden per-feed captured fraction of the reference layout
        constexpr double kGoldenFi = 0.92181947;
        for (int k = 0; k < 4; ++k) {
            CHECK(spillover_efficiency(fi, k) == doctest::Approx(kGoldenFi).epsilon(1e-7));
        }
        const double rays = captured_by_rays(il.feeds[0], il.q, 2.0, 2.0);
        CHECK(rays == doctest::Approx(kGoldenFi).epsilon(2e-3));
        CHECK(spillover_efficiency(fi) == doctest::Approx(kGoldenFi).epsilon(1e-7));

        const auto si = build_architecture(Variant::TaraSi, g, 4, kFr1);
        constexpr double kGoldenSi = 0.92518130;
        CHECK(spillover_efficiency(si) == doctest::Approx(kGoldenSi).epsilon(1e-7));

        CHECK_THROWS_AS(spillover_efficiency(build_architecture(Variant::HadbFc, g, 4, kFr1)), std::invalid_argument);
    }

    TEST_CASE("spillover limits")
    {
        const auto g = aperture::build_ura(4, 4, 0.5);
        // hemispherical feed (cos^0) far from a small aperture: solid-angle fraction
        Illuminator il;
        il.q = 0.0;
        il.feeds.push_back({Vec3(20.0, 0.0, 0.0), -Vec3::UnitX()});
        const double eta = illumination_matrix(il, g, 8).squaredNorm();
        const double omega = oracle::rectangle_solid_angle(2.0, 2.0, 20.0);
        CHECK(eta == doctest::Approx(2.0 * omega / (4.0 * kPi)).epsilon(1e-4));

        // pencil feed on the centre: everything captured
        il.feeds[0].position.x() = 2.0;
        double prev = 0.0;
        for (double q : {2.0, 5.0, 10.0, 20.0, 50.0, 200.0}) {
            il.q = q;
            const double e = illumination_matrix(il, g, 16).squaredNorm();
            CHECK(e >= prev);
            CHECK(e <= 1.0 + 1e-9);
            prev = e;
        }
        // the spot is far narrower than a cell, so the quadrature must resolve it
        il.q = 2000.0;
        const double pencil = illumination_matrix(il, g, 96).squaredNorm();
        CHECK(pencil == doctest::Approx(1.0).epsilon(2e-3));
    }

    TEST_CASE("feed exponent")
    {
        const double q = feed_exponent_for_edge_taper(4.0, 2.0, -10.0);
        CHECK(q == doctest::Approx(18.6377).epsilon(1e-4));
        const double c = std::cos(std::atan(0.5));
        CHECK(power_to_db(std::pow(c, q + 2.0)) == doctest::Approx(-10.0));
    }

    TEST_CASE("lossless illumination option")
    {
        DesignParams d;
        d.lossless_illumination = true;
        const auto fi = build_architecture(Variant::TaraFi, 64, 4, kFr1, d);
        for (int k = 0; k < 4; ++k)
            CHECK(spillover_efficiency(fi, k) == doctest::Approx(1.0).epsilon(1e-14));
    }

    TEST_CASE("lens beam matrix")
    {
        const auto s = lens_beam_sines(5, deg_to_rad(45.0));
        CHECK(s[2] == 0.0);
        CHECK(s[4] == doctest::Approx(std::sin(deg_to_rad(45.0))));

        const auto g = aperture::build_ura(8, 8, 0.5);
        const double il = 2.0;
        const CMat L = rotman_beam_matrix(8, 5, g, deg_to_rad(45.0), il);
        REQUIRE(L.cols() == 25);
        // centre beam: constant phase
        const CVec c = L.col(12);
        for (int m = 1; m < 64; ++m)
            CHECK(std::abs(std::arg(c(m) / c(0))) < 1e-12);
        // column power: both stacks' losses
        for (int b = 0; b < 25; ++b)
            CHECK(L.col(b).squaredNorm() == doctest::Approx(db_to_power(-2.0 * il)));

        // crosstalk against the Dirichlet kernel
        const double amp1 = db_to_power(-il) / 8.0; // |column entry|^2 of one stack
        for (int b1 = 0; b1 < 25; ++b1)
            for (int b2 = 0; b2 < 25; ++b2) {
                const double xh = kTwoPi * 0.5 * (s[b1 / 5] - s[b2 / 5]);
                const double xv = kTwoPi * 0.5 * (s[b1 % 5] - s[b2 % 5]);
                const double expect = amp1 * amp1 * std::abs(oracle::dirichlet(8, xh)) * std::abs(oracle::dirichlet(8, xv));
                CHECK(std::abs(L.col(b1).dot(L.col(b2))) == doctest::Approx(expect).epsilon(1e-9));
            }

        CHECK_THROWS_AS(rotman_beam_matrix(6, 5, g, deg_to_rad(45.0), il), std::invalid_argument);
        const auto line = aperture::build_ura(8, 1, 0.5);
        CHECK(rotman_beam_matrix(8, 6, line, deg_to_rad(45.0), il).cols() == 6);
    }

    TEST_CASE("wilkinson combiner")
    {
        const std::array<cplx, 2> same{1.0, 1.0};
        auto r = wilkinson_combine(same);
        CHECK(std::norm(r.output) == doctest::Approx(2.0));
        CHECK(r.dissipated == doctest::Approx(0.0));
        const std::array<cplx, 2> anti{1.0, -1.0};
        r = wilkinson_combine(anti);
        CHECK(std::norm(r.output) == doctest::Approx(0.0));
        CHECK(r.dissipated == doctest::Approx(2.0));
        const std::array<cplx, 4> single{1.0, 0.0, 0.0, 0.0};
        r = wilkinson_combine(single);
        CHECK(std::norm(r.output) == doctest::Approx(0.25));
        CHECK(r.dissipated == doctest::Approx(0.75));
        const std::array<cplx, 1> lone{1.0};
        CHECK_THROWS_AS(wilkinson_combine(lone), std::invalid_argument);

        Rng rng(8);
        for (int i = 0; i < 2000; ++i) {
            std::vector<cplx> in(2 + rng.uniform_index(7));
            for (auto &u : in)
                u = rng.complex_normal();
            CHECK(wilkinson_combine(in).dissipated > 1e-9);
            std::vector<cplx> eq(in.size(), in[0]);
            CHECK(wilkinson_combine(eq).dissipated <= 1e-12 * std::norm(in[0]) * eq.size());
        }
    }

    TEST_CASE("power ledger arithmetic")
    {
        const auto fd = build_architecture(Variant::FD, 64, 4, kFr1);
        const auto pb = consumed_power(fd, 20.0);
        CHECK(pb.p_total == doctest::Approx(173.12).epsilon(1e-12));
        CHECK(pb.efficiency() == doctest::Approx(0.11553).epsilon(1e-4));

        RfParams lossless = kFr1;
        lossless.ps_loss_db = 0.0;
        DesignParams d;
        d.lossless_illumination = true;
        for (auto v : {Variant::TaraFi, Variant::TaraSi}) {
            const auto t = build_architecture(v, 64, 4, lossless, d);
            CHECK(consumed_power(t, 20.0).p_total == doctest::Approx(48.32).epsilon(1e-12));
        }

        const auto fc = build_architecture(Variant::HadbFc, 64, 4, kFr1);
        CHECK(consumed_power(fc, 20.0, 0.5).p_ima > consumed_power(fc, 20.0, 1.0).p_ima);
        CHECK_THROWS_AS(consumed_power(fc, 0.0), std::invalid_argument);
        CHECK_THROWS_AS(consumed_power(fc, 1.0, 0.0), std::invalid_argument);

        const auto ideal = build_architecture(Variant::Ideal, 64, 4, kFr1);
        CHECK(consumed_power(ideal, 7.0).p_total == 7.0);
    }

    TEST_CASE("power ledger consistency")
    {
        for (auto band : {Band::FR1, Band::FR2})
            for (auto v : kCompared) {
                const auto spec = build_architecture(v, 64, 4, RfParams::preset(band));
                double prev = 0.0;
                for (double p : {0.1, 0.5, 1.0, 20.0, 100.0, 1000.0}) {
                    const auto pb = consumed_power(spec, p);
                    CHECK(pb.p_total == doctest::Approx(pb.p_pa_dc + pb.p_rf_chains + pb.p_ima));
                    CHECK(pb.p_radiated <= spec.rf().eta_pae * pb.p_pa_dc * (1.0 + 1e-12));
                    CHECK(pb.p_total > prev);
                    prev = pb.p_total;
                }
                if (!spec.is_hadb())
                    CHECK(consumed_power(spec, 1.0).p_ima == 0.0);
            }
    }

    TEST_CASE("component counts")
    {
        const auto fc = build_architecture(Variant::HadbFc, 256, 4, kFr1);
        const auto c = count_components(fc);
        CHECK(c.lines == 1024);
        CHECK(c.phase_shifters == 1024);
        CHECK(c.dividers == 4 * 255);
        CHECK(c.combiners == 256);
        CHECK(c.imas == 4 * 8);

        for (int n_t : {16, 64, 256}) {
            const auto pc = count_components(build_architecture(Variant::HadbPc, n_t, 4, kFr1));
            CHECK(pc.lines == n_t);
            CHECK(pc.combiners == 0);
            CHECK(count_components(build_architecture(Variant::HadbFc, n_t, 4, kFr1)).lines == 4 * n_t);
            for (auto v : {Variant::TaraFi, Variant::TaraSi}) {
                const auto t = count_components(build_architecture(v, n_t, 4, kFr1));
                CHECK(t.imas == 0);
                CHECK(t.phase_shifters == n_t);
                CHECK(t.lines == 4);
            }
            const auto rl = count_components(build_architecture(Variant::Rl, n_t, 4, kFr1));
            CHECK(rl.switches == 1);
            CHECK(rl.phase_shifters == 0);
        }
        CHECK(division_stages(1) == 0);
        CHECK(division_stages(64) == 6);
        CHECK(division_stages(65) == 7);
    }
}
