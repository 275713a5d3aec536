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

#include "rissim/em.hpp"
#include "rissim/error.hpp"

#include <doctest.h>

using namespace rissim;

namespace
{
    // Independent Friis oracle, path gain in dB
    double friis_db(double d, double lambda)
    {
        return -20.0 * std::log10(4.0 * pi * d / lambda);
    }

    // Closed-form normal-incidence reflection for a lossless dielectric
    double fresnel_normal(double eps_r)
    {
        return (1.0 - std::sqrt(eps_r)) / (1.0 + std::sqrt(eps_r));
    }
}

TEST_CASE("friis_gain")
{
    const double lambda = 0.1;
    CHECK(std::abs(friis_gain(lambda / (4.0 * pi), lambda)) == doctest::Approx(1.0));

    const Carrier c = Carrier::from_frequency(3.7e9);
    CHECK(c.wavelength_m == doctest::Approx(0.081025).epsilon(1e-5));
    const double db = 20.0 * std::log10(std::abs(friis_gain(10.0, c.wavelength_m)));
    CHECK(db == doctest::Approx(friis_db(10.0, c.wavelength_m)).epsilon(1e-12));
    CHECK(db == doctest::Approx(-63.81).epsilon(1e-4));

    CHECK_THROWS_AS(friis_gain(0.0, lambda), validation_error);
    CHECK_THROWS_AS(friis_gain(-1.0, lambda), validation_error);
}

TEST_CASE("friis_gain: phase")
{
    const double lambda = 0.08;
    const double d = 3.3;
    const Complex g = friis_gain(d, lambda);
    const Complex expected = std::polar(lambda / (4.0 * pi * d), -2.0 * pi * d / lambda);
    CHECK(std::abs(g - expected) < 1e-12 * std::abs(expected) * 1e3);
}

TEST_CASE("fresnel_coeff")
{
    const double lambda = 0.081;
    const Material glass{"g", 5.0, 0.0, 0.0};
    const Complex te = fresnel_coeff(0.0, glass, lambda, Polarization::te);
    CHECK(te.real() == doctest::Approx(fresnel_normal(5.0)).epsilon(1e-12));
    CHECK(te.real() == doctest::Approx(-0.3820).epsilon(1e-4));
    CHECK(std::abs(te.imag()) < 1e-15);
    // TM at normal incidence is the negated TE value in the s x k basis
    CHECK(std::abs(fresnel_coeff(0.0, glass, lambda, Polarization::tm) + te) < 1e-12);

    const Material pec{"pec", 1e9, 0.0, 0.0};
    for (double th : {0.0, 0.3, 0.8, 1.2, 1.5})
    {
        CHECK(std::abs(std::abs(fresnel_coeff(th, pec, lambda, Polarization::te)) - 1.0) < 1e-3);
        CHECK(std::abs(std::abs(fresnel_coeff(th, pec, lambda, Polarization::tm)) - 1.0) < 1e-3);
    }

    for (auto pol : {Polarization::te, Polarization::tm})
        CHECK(std::abs(fresnel_coeff(0.5 * pi - 1e-7, glass, lambda, pol)) == doctest::Approx(1.0).epsilon(1e-5));

    // Brewster angle zeroes TM for a lossless dielectric
    CHECK(std::abs(fresnel_coeff(std::atan(std::sqrt(5.0)), glass, lambda, Polarization::tm)) < 1e-12);

    // conductivity adds loss, |Gamma| < 1
    const Material concrete{"c", 5.31, 0.15, 0.0};
    CHECK(std::abs(fresnel_coeff(0.4, concrete, lambda, Polarization::te)) < 1.0);
}

TEST_CASE("path_amplitude")
{
    const Carrier c = Carrier::from_frequency(3.7e9);
    const Vec3 tx{0, 2, 1}, rx{4, 2, 1};

    const auto direct = trace_paths(Scene(), tx, rx, {.max_reflections = 0});
    REQUIRE(direct.size() == 1);
    CHECK(std::abs(path_amplitude(direct[0], c, Scene()) - friis_gain(4.0, c.wavelength_m)) < 1e-15);

    const Scene mirror({test::plane(1, 0.0, 1e4, "pec")}, {test::pec()});
    const auto paths = trace_paths(mirror, tx, rx, {.max_reflections = 1});
    REQUIRE(paths.size() == 2);
    const double D = paths[1].length;
    CHECK(std::abs(path_amplitude(paths[1], c, mirror)) ==
          doctest::Approx(c.wavelength_m / (4.0 * pi * D)).epsilon(1e-6));

    const Scene wall({{{2, 0, 0}, {0, 4, 0}, {0, 0, 2}, "w"}}, {{"w", 4.0, 0.01, 10.0}});
    const auto through = trace_paths(wall, tx, rx, {.max_reflections = 0, .allow_transmission = true});
    REQUIRE(through.size() == 1);
    REQUIRE(through[0].interactions.size() == 1);
    CHECK(std::abs(path_amplitude(through[0], c, wall)) ==
          doctest::Approx(std::abs(friis_gain(4.0, c.wavelength_m)) * 0.316227766).epsilon(1e-8));
}

TEST_CASE("path_amplitude: vertical polarization off a floor uses TM, off a side wall uses TE")
{
    const Carrier c = Carrier::from_frequency(3.7e9);
    const Material m{"m", 5.0, 0.0, 0.0};
    const Vec3 tx{0, 0, 2}, rx{6, 0, 2};

    const Scene floor({test::plane(2, 0.0, 1e3, "m")}, {m});
    const auto fp = trace_paths(floor, tx, rx, {.max_reflections = 1});
    REQUIRE(fp.size() == 2);
    const double th_f = std::atan2(3.0, 2.0);
    CHECK(std::abs(interaction_gain(fp[1], c, floor)) ==
          doctest::Approx(std::abs(fresnel_coeff(th_f, m, c.wavelength_m, Polarization::tm))).epsilon(1e-9));

    const Scene side({test::plane(1, -2.0, 1e3, "m")}, {m});
    const auto sp = trace_paths(side, tx, rx, {.max_reflections = 1});
    REQUIRE(sp.size() == 2);
    CHECK(std::abs(interaction_gain(sp[1], c, side)) ==
          doctest::Approx(std::abs(fresnel_coeff(th_f, m, c.wavelength_m, Polarization::te))).epsilon(1e-9));
}

TEST_CASE("dbm conversions")
{
    CHECK(dbm_from_amplitude(1.0, 30.0) == doctest::Approx(30.0));
    CHECK(dbm_to_mw(30.0) == doctest::Approx(1000.0));
    CHECK(mw_to_dbm(dbm_to_mw(30.0)) == doctest::Approx(30.0));
    CHECK(dbm_from_amplitude(std::pow(10.0, -63.81 / 20.0), 30.0) == doctest::Approx(-33.81));
    CHECK(dbm_from_amplitude(0.0, 30.0) == minus_infinity_dbm);
    CHECK(mw_to_dbm(0.0) == minus_infinity_dbm);
}
