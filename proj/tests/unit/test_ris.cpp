// SPDX-License-Identifier: Apache-2.0
//
// rissim - ray-based simulator for RIS-aided indoor coverage
// Copyright (C) 2026 The rissim authors
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

#include "support.hpp"

#include "rissim/error.hpp"
#include "rissim/ris.hpp"

#include <doctest.h>

using namespace rissim;

namespace
{
    RisPanel panel(unsigned nx, unsigned ny, double lambda)
    {
        RisPanel p;
        p.center = {0, 0, 0};
        p.normal = {1, 0, 0};
        p.x_axis = {0, 1, 0};
        p.nx = nx;
        p.ny = ny;
        p.dx = p.dy = 0.5 * lambda;
        return p;
    }

    // Far-field radar-equation oracle, path gain |a|^2
    double radar_gain(double K, double g, double A, double lambda, double da, double db)
    {
        return std::pow(K * g * A, 2) * lambda * lambda / (std::pow(4.0 * pi, 3) * da * da * db * db);
    }

    double circular_distance(double a, double b)
    {
        const double d = std::fmod(std::abs(a - b), 2.0 * pi);
        return std::min(d, 2.0 * pi - d);
    }

    CascadeResult cascade(const RisPanel &p, const RisConfig &cfg, const Carrier &c, const Vec3 &bs, const Vec3 &ms)
    {
        const auto a = trace_paths(Scene(), bs, p.center, {.max_reflections = 0});
        const auto b = trace_paths(Scene(), p.center, ms, {.max_reflections = 0});
        return ris_cascade(Scene(), a, b, p, cfg, c, {.far_field = FarFieldPolicy::ignore});
    }
}

TEST_CASE("uc_positions")
{
    RisPanel one = panel(1, 1, 0.1);
    one.center = {1, 2, 3};
    const auto p1 = uc_positions(one);
    REQUIRE(p1.size() == 1);
    CHECK(distance(p1[0], one.center) < 1e-15);

    const double d = 0.05;
    const auto p2 = uc_positions(panel(2, 2, 0.1));
    REQUIRE(p2.size() == 4);
    // x fastest, x_axis = +y, y_axis = normal x x_axis = +z
    CHECK(distance(p2[0], Vec3{0, -d / 2, -d / 2}) < 1e-15);
    CHECK(distance(p2[1], Vec3{0, d / 2, -d / 2}) < 1e-15);
    CHECK(distance(p2[2], Vec3{0, -d / 2, d / 2}) < 1e-15);
    CHECK(distance(p2[3], Vec3{0, d / 2, d / 2}) < 1e-15);

    const double lambda = 0.0811;
    const auto p16 = uc_positions(panel(16, 16, lambda));
    // outermost centers span 15 dx, so the cell edges span 16 dx = 8 lambda
    CHECK(p16.back().y - p16.front().y + 0.5 * lambda == doctest::Approx(8.0 * lambda));
}

TEST_CASE("uc_scattering")
{
    const double lambda = speed_of_light / 27e9;
    CHECK(lambda == doctest::Approx(0.011103).epsilon(1e-4));
    const double d = 0.5 * lambda;
    const double g = uc_scattering(ScatteringModel::tang2022, 0, 0, lambda, d, d, 1.0);
    CHECK(g == doctest::Approx(std::sqrt(4.0 * pi) * lambda / 4.0).epsilon(1e-14));
    CHECK(g == doctest::Approx(0.009840).epsilon(1e-3));
    CHECK(uc_scattering(ScatteringModel::tang2022, 0.3, 0.5 * pi, lambda, d, d, 1.0) == doctest::Approx(0.0));
    CHECK(uc_scattering(ScatteringModel::tang2020, 0, 0, lambda, d, d, 1.0) == doctest::Approx(lambda).epsilon(1e-14));

    // ellingson at normal incidence: G lambda / sqrt(4 pi)
    CHECK(uc_scattering(ScatteringModel::ellingson, 0, 0, lambda, d, d, 1.0) ==
          doctest::Approx(4.0 * lambda / std::sqrt(4.0 * pi)).epsilon(1e-14));

    CHECK_THROWS_AS(uc_scattering(ScatteringModel::tang2022, -0.1, 0, lambda, d, d, 1.0), validation_error);
    CHECK_THROWS_AS(uc_scattering(ScatteringModel::tang2022, 0, 1.6, lambda, d, d, 1.0), validation_error);
    CHECK_THROWS_AS(uc_scattering(ScatteringModel::tang2020, 0, 0, lambda, d, d, -1.0), validation_error);
}

TEST_CASE("fraunhofer_distance")
{
    const double l27 = speed_of_light / 27e9;
    CHECK(fraunhofer_distance(panel(32, 32, l27), l27) == doctest::Approx(1024.0 * l27).epsilon(1e-12));
    CHECK(fraunhofer_distance(panel(32, 32, l27), l27) == doctest::Approx(11.37).epsilon(1e-3));
    CHECK(13.19 >= fraunhofer_distance(panel(32, 32, l27), l27));
    CHECK(fraunhofer_distance(panel(1, 1, l27), l27) == doctest::Approx(l27).epsilon(1e-12));
    const double l37 = speed_of_light / 3.7e9;
    CHECK(fraunhofer_distance(panel(32, 32, l37), l37) == doctest::Approx(82.97).epsilon(1e-4));
}

TEST_CASE("design_phases")
{
    const double lambda = 1.0;
    const RisConfig one = design_phases(panel(1, 1, lambda), {1, 0, 0}, {1, 0, 0}, lambda);
    REQUIRE(one.beta.size() == 1);
    CHECK(one.beta[0] == 0.0);

    const RisConfig uniform = design_phases(panel(8, 8, lambda), {1, 0, 0}, {1, 0, 0}, lambda);
    for (double b : uniform.beta)
        CHECK(b == doctest::Approx(uniform.beta[0]));

    const double th = 30.0 * pi / 180.0;
    const RisConfig steer = design_phases(panel(2, 1, lambda), {1, 0, 0}, {std::cos(th), std::sin(th), 0}, lambda);
    REQUIRE(steer.beta.size() == 2);
    const double expected = std::fmod(2.0 * pi * 0.5 * std::sin(th), 2.0 * pi);
    CHECK(circular_distance(steer.beta[0], steer.beta[1]) == doctest::Approx(expected));
    CHECK(expected == doctest::Approx(pi / 2));
    for (double b : steer.beta)
    {
        CHECK(b >= 0.0);
        CHECK(b < 2.0 * pi);
    }

    CHECK_THROWS_AS(design_phases(panel(2, 2, lambda), {-1, 0, 0}, {1, 0, 0}, lambda), validation_error);
    CHECK_THROWS_AS(design_phases(panel(2, 2, lambda), {1, 0, 0}, {-1, 0.1, 0}, lambda), validation_error);
}

TEST_CASE("omega_entries")
{
    const double lambda = speed_of_light / 27e9;
    RisPanel p = panel(2, 2, lambda);
    RisConfig cfg;
    cfg.beta.assign(4, 0.0);
    const double g = uc_scattering(ScatteringModel::tang2022, 0, 0, lambda, p.dx, p.dy, 1.0);
    for (const Complex &w : omega_entries(p, cfg, 0, 0, lambda))
    {
        CHECK(w.real() == doctest::Approx(0.009840).epsilon(1e-3));
        CHECK(w.imag() == doctest::Approx(0.0));
    }

    cfg.beta.assign(4, 0.5 * pi);
    for (const Complex &w : omega_entries(p, cfg, 0, 0, lambda))
        CHECK(std::abs(w - Complex(0, g)) < 1e-15);

    p.amplitude = 0.0;
    for (const Complex &w : omega_entries(p, cfg, 0, 0, lambda))
        CHECK(w == Complex(0, 0));

    cfg.beta.assign(3, 0.0);
    CHECK_THROWS_AS(omega_entries(p, cfg, 0, 0, lambda), validation_error);
}

TEST_CASE("ris_cascade: single cell against the radar equation")
{
    const Carrier c = Carrier::from_frequency(27e9);
    const RisPanel p = panel(1, 1, c.wavelength_m);
    const Vec3 bs{1, 0, 0}, ms{1, 0, 0};
    const RisConfig cfg = design_phases(p, {1, 0, 0}, {1, 0, 0}, c.wavelength_m);
    const auto r = cascade(p, cfg, c, bs, ms);
    REQUIRE(r.paths.size() == 1);
    const double a = std::abs(r.paths[0].amplitude);
    const double g = std::sqrt(4.0 * pi) * c.wavelength_m / 4.0;
    CHECK(a == doctest::Approx(c.wavelength_m * g / std::pow(4.0 * pi, 1.5)).epsilon(1e-12));
    CHECK(a == doctest::Approx(2.452e-6).epsilon(1e-3));
    CHECK(20.0 * std::log10(a) == doctest::Approx(-112.2).epsilon(1e-3));
    CHECK(a * a == doctest::Approx(radar_gain(1, g, 1, c.wavelength_m, 1, 1)).epsilon(1e-12));
    CHECK(r.paths[0].path.tag == PathTag::ris);
    CHECK(r.paths[0].path.length == doctest::Approx(2.0));
}

TEST_CASE("ris_cascade: K cells add coherently, alternating phases cancel")
{
    const Carrier c = Carrier::from_frequency(27e9);
    const Vec3 bs{2, 0, 0}, ms{3, 0, 0};
    const RisPanel one = panel(1, 1, c.wavelength_m);
    const double single = std::abs(cascade(one, design_phases(one, {1, 0, 0}, {1, 0, 0}, c.wavelength_m), c, bs, ms)
                                       .paths[0]
                                       .amplitude);

    const RisPanel many = panel(8, 4, c.wavelength_m);
    const RisConfig opt = design_phases(many, {1, 0, 0}, {1, 0, 0}, c.wavelength_m);
    const double k = std::abs(cascade(many, opt, c, bs, ms).paths[0].amplitude);
    CHECK(k == doctest::Approx(32.0 * single).epsilon(1e-12));

    RisConfig alt = opt;
    for (std::size_t n = 0; n < alt.beta.size(); ++n)
        alt.beta[n] = (n % 2) ? pi : 0.0;
    CHECK(std::abs(cascade(many, alt, c, bs, ms).paths[0].amplitude) < 1e-12 * single);
}

TEST_CASE("ris_cascade: oblique far-field geometry against the radar equation")
{
    const Carrier c = Carrier::from_frequency(3.7e9);
    const RisPanel p = panel(16, 16, c.wavelength_m);
    const Vec3 bs{40, 25, 8}, ms{35, -30, -5};
    const Vec3 ui = normalize(bs - p.center), us = normalize(ms - p.center);
    const RisConfig cfg = design_phases(p, ui, us, c.wavelength_m);
    const auto r = cascade(p, cfg, c, bs, ms);
    REQUIRE(r.paths.size() == 1);
    const double g = uc_scattering(ScatteringModel::tang2022, angle_between(ui, p.normal), angle_between(us, p.normal),
                                   c.wavelength_m, p.dx, p.dy, 1.0);
    const double expected = radar_gain(256, g, 1, c.wavelength_m, distance(bs, p.center), distance(ms, p.center));
    const double got = std::norm(r.paths[0].amplitude);
    CHECK(std::abs(10.0 * std::log10(got / expected)) < 1e-9);
}

TEST_CASE("ris_cascade: behind-the-panel legs contribute nothing, bad legs throw")
{
    const Carrier c = Carrier::from_frequency(3.7e9);
    const RisPanel p = panel(4, 4, c.wavelength_m);
    const RisConfig cfg = design_phases(p, {1, 0, 0}, {1, 0, 0}, c.wavelength_m);
    CHECK(cascade(p, cfg, c, {-3, 0, 0}, {3, 0, 0}).paths.empty());
    CHECK(cascade(p, cfg, c, {3, 0, 0}, {-3, 1, 0}).paths.empty());

    const auto wrong = trace_paths(Scene(), {3, 0, 0}, {0, 1, 0}, {.max_reflections = 0});
    const auto b = trace_paths(Scene(), p.center, {3, 0, 0}, {.max_reflections = 0});
    CHECK_THROWS_AS(ris_cascade(Scene(), wrong, b, p, cfg, c), validation_error);

    RisConfig short_cfg = cfg;
    short_cfg.beta.pop_back();
    const auto a = trace_paths(Scene(), {3, 0, 0}, p.center, {.max_reflections = 0});
    CHECK_THROWS_AS(ris_cascade(Scene(), a, b, p, short_cfg, c), validation_error);
}

TEST_CASE("ris_cascade: far-field policy")
{
    const Carrier c = Carrier::from_frequency(3.7e9);
    const RisPanel p = panel(32, 32, c.wavelength_m);
    const RisConfig cfg = design_phases(p, {1, 0, 0}, {1, 0, 0}, c.wavelength_m);
    const auto a = trace_paths(Scene(), {10, 0, 0}, p.center, {.max_reflections = 0});
    const auto b = trace_paths(Scene(), p.center, {20, 0, 0}, {.max_reflections = 0});
    CHECK(ris_cascade(Scene(), a, b, p, cfg, c, {.far_field = FarFieldPolicy::warn}).far_field_violations == 2);
    CHECK(ris_cascade(Scene(), a, b, p, cfg, c, {.far_field = FarFieldPolicy::ignore}).far_field_violations == 0);
    CHECK_THROWS_AS(ris_cascade(Scene(), a, b, p, cfg, c, {.far_field = FarFieldPolicy::strict}), simulation_error);
    CHECK(ris_cascade(Scene(), a, b, p, cfg, c, {.far_field = FarFieldPolicy::strict, .far_field_factor = 0.1})
              .far_field_violations == 0);
}

TEST_CASE("ris_cascade: exact-distance phases converge to plane-wave in the far field")
{
    const Carrier c = Carrier::from_frequency(3.7e9);
    const RisPanel p = panel(8, 8, c.wavelength_m);
    const Vec3 bs{4000, 1000, 0}, ms{3000, -2000, 500};
    const RisConfig cfg = design_phases(p, normalize(bs), normalize(ms), c.wavelength_m);
    const auto a = trace_paths(Scene(), bs, p.center, {.max_reflections = 0});
    const auto b = trace_paths(Scene(), p.center, ms, {.max_reflections = 0});
    const Complex pw = ris_cascade(Scene(), a, b, p, cfg, c, {.phase_model = PhaseModel::plane_wave}).paths[0].amplitude;
    const Complex ex = ris_cascade(Scene(), a, b, p, cfg, c, {.phase_model = PhaseModel::exact_distance}).paths[0].amplitude;
    CHECK(std::abs(ex) / std::abs(pw) == doctest::Approx(1.0).epsilon(1e-4));
}

TEST_CASE("strongest_pair and design_for_pair")
{
    const Carrier c = Carrier::from_frequency(3.7e9);
    const RisPanel p = panel(4, 4, c.wavelength_m);
    const Scene mirror({test::plane(2, -3.0, 1e3, "pec")}, {test::pec()});
    const Vec3 bs{5, 2, 0}, ms{6, -1, 0};
    const auto a = trace_paths(mirror, bs, p.center, {.max_reflections = 1});
    const auto b = trace_paths(mirror, p.center, ms, {.max_reflections = 1});
    REQUIRE(a.size() == 2);
    REQUIRE(b.size() == 2);
    const auto pick = strongest_pair(mirror, a, b, p, c);
    REQUIRE(pick);
    // the direct legs are shortest and lose nothing at a reflection
    CHECK(pick->a == 0);
    CHECK(pick->b == 0);

    const RisConfig cfg = design_for_pair(p, a[pick->a], b[pick->b], c.wavelength_m);
    CHECK(distance(cfg.anchor, ms) < 1e-12);
    const std::vector<PropagationPath> a1{a[0]}, b1{b[0]};
    const auto r = ris_cascade(mirror, a1, b1, p, cfg, c);
    CHECK(std::abs(r.paths[0].amplitude) == doctest::Approx(pick->magnitude).epsilon(1e-12));

    const std::vector<PropagationPath> behind = trace_paths(Scene(), {-5, 0, 0}, p.center, {.max_reflections = 0});
    CHECK_FALSE(strongest_pair(Scene(), behind, b1, p, c));
}

TEST_CASE("RisPanel::validate")
{
    RisPanel p = panel(2, 2, 0.1);
    CHECK_NOTHROW(p.validate());
    p.amplitude = 1.5;
    CHECK_THROWS_AS(p.validate(), validation_error);
    p = panel(2, 2, 0.1);
    p.x_axis = {1, 0, 0};
    CHECK_THROWS_AS(p.validate(), validation_error);
    p = panel(2, 2, 0.1);
    p.nx = 0;
    CHECK_THROWS_AS(p.validate(), validation_error);
    CHECK_THROWS_AS(scattering_model_from_string("tang2021"), validation_error);
    CHECK(scattering_model_from_string(to_string(ScatteringModel::ellingson)) == ScatteringModel::ellingson);
}
