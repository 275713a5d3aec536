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

#ifndef RISSIM_JSON_IO_HPP
#define RISSIM_JSON_IO_HPP

#include "rissim/scene.hpp"

#include <json.hpp>

#include <string>

namespace rissim
{
    using json = nlohmann::ordered_json;

    // Field accessors; throw parse_error naming the field path on type/shape mismatch
    Vec3 vec3_from_json(const json &j, const std::string &field);
    json vec3_to_json(const Vec3 &v);
    double number_field(const json &obj, const std::string &key, const std::string &path);
    double number_field(const json &obj, const std::string &key, const std::string &path, double fallback);

    Material material_from_json(const json &j);
    json material_to_json(const Material &m);

    FactoryParams factory_from_json(const json &j);
    json factory_to_json(const FactoryParams &p);

    // Accepts either explicit surfaces or a "factory" block
    Scene scene_from_json(const json &doc);
    json scene_to_json(const Scene &scene);
}

#endif
