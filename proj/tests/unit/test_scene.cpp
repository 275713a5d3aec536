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
#include "rissim/json_io.hpp"

#include <doctest.h>

using namespace rissim;

TEST_CASE("load_scene: one wall and one material")
{
    const Scene s = load_scene(R"({
        "materials": [{"id": "concrete", "eps_r": 5.31, "sigma": 0.15, "trans_loss_db": 20}],
        "surfaces": [{"origin": [0, 0, 0], "u": [4, 0, 0], "v": [0, 0, 5], "material": "concrete"}]
    })");
    CHECK(s.surfaces().size() == 1);
    CHECK(s.materials().size() == 1);
    CHECK(s.surfaces()[0].area() == doctest::Approx(20.0));
}

TEST_CASE("load_scene: dangling material names the id")
{
    try
    {
        load_scene(R"({
            "materials": [{"id": "concrete", "eps_r": 5.31, "sigma": 0.15, "trans_loss_db": 20}],
            "surfaces": [{"origin": [0, 0, 0], "u": [4, 0, 0], "v": [0, 0, 5], "material": "steel"}]
        })");
        FAIL("expected validation_error");
    }
    catch (const validation_error &e)
    {
        CHECK(std::string(e.what()).find("steel") != std::string::npos);
    }
}

TEST_CASE("load_scene: rejects broken input")
{
    CHECK_THROWS_AS(load_scene("{ not json"), parse_error);
    CHECK_THROWS_AS(load_scene(R"({"materials": [{"id": "m", "eps_r": 0.5, "sigma": 0, "trans_loss_db": 0}], "surfaces": []})"),
                    validation_error);
    CHECK_THROWS_AS(load_scene(R"({"materials": [{"id": "m", "eps_r": 2, "sigma": -1, "trans_loss_db": 0}], "surfaces": []})"),
                    validation_error);
    CHECK_THROWS_AS(load_scene(R"({"materials": [{"id": "m", "eps_r": 2, "sigma": 0, "trans_loss_db": 0},
                                                 {"id": "m", "eps_r": 3, "sigma": 0, "trans_loss_db": 0}], "surfaces": []})"),
                    validation_error);
    // u and v not orthogonal
    CHECK_THROWS_AS(load_scene(R"({"materials": [{"id": "m", "eps_r": 2, "sigma": 0, "trans_loss_db": 0}],
                                   "surfaces": [{"origin": [0,0,0], "u": [1,0,0], "v": [1,1,0], "material": "m"}]})"),
                    validation_error);
}

TEST_CASE("shipped factory fixture has 6 + 5 * racks surfaces")
{
    const Scene s = load_scene_file(test::source_dir + "/fixtures/scenes/factory.json");
    const auto p = factory_from_json(json::parse(R"({})"));
    const std::size_t racks = static_cast<std::size_t>(p.rack_rows) * p.racks_per_row;
    CHECK(s.surfaces().size() == 6 + 5 * racks);
}

TEST_CASE("build_factory: default heights")
{
    const FactoryParams p;
    const Scene s = build_factory(p);
    REQUIRE(s.surfaces().size() == 81);
    for (std::size_t i = 0; i < s.surfaces().size(); ++i)
    {
        const Surface &f = s.surfaces()[i];
        const double top = std::max({f.origin.z, f.origin.z + f.edge_u.z, f.origin.z + f.edge_v.z,
                                     f.origin.z + f.edge_u.z + f.edge_v.z});
        if (i < 6)
        {
            if (i != 0) // floor stays at z = 0
                CHECK(top == doctest::Approx(5.0));
        }
        else
            CHECK(top == doctest::Approx(4.4));
    }
    CHECK(s.bounds().max.z == doctest::Approx(5.0));
}

TEST_CASE("build_factory: counts")
{
    FactoryParams p;
    p.rack_rows = 0;
    CHECK(build_factory(p).surfaces().size() == 6);
    p.rack_rows = 3;
    p.racks_per_row = 5;
    CHECK(build_factory(p).surfaces().size() == 81);
}

TEST_CASE("build_factory: layout errors")
{
    FactoryParams p;
    p.racks_per_row = 20;
    CHECK_THROWS_AS(build_factory(p), layout_error);
    p = {};
    p.rack_height = 6.0;
    CHECK_THROWS_AS(build_factory(p), layout_error);
}

TEST_CASE("build_factory: shell normals point inward and rack faces outward")
{
    const Scene s = build_factory({});
    const Vec3 inside{30, 5, 2};
    for (std::size_t i = 0; i < 6; ++i)
        CHECK(s.surfaces()[i].plane_distance(inside) > 0.0);
    // a point inside the first rack box is behind every one of its faces
    const Surface &top = s.surfaces()[6];
    const Vec3 core = top.origin + 0.5 * top.edge_u + 0.5 * top.edge_v - Vec3{0, 0, 1.0};
    for (std::size_t i = 6; i < 11; ++i)
        CHECK(s.surfaces()[i].plane_distance(core) < 0.0);
}

TEST_CASE("serialize_scene round trip")
{
    const Scene a = build_factory({});
    const Scene b = load_scene(serialize_scene(a));
    REQUIRE(a.surfaces().size() == b.surfaces().size());
    for (std::size_t i = 0; i < a.surfaces().size(); ++i)
    {
        CHECK(distance(a.surfaces()[i].origin, b.surfaces()[i].origin) == 0.0);
        CHECK(distance(a.surfaces()[i].edge_u, b.surfaces()[i].edge_u) == 0.0);
        CHECK(a.surfaces()[i].material_id == b.surfaces()[i].material_id);
    }
    CHECK(serialize_scene(b) == serialize_scene(a));
}
