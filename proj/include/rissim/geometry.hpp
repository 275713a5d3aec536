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

#ifndef RISSIM_GEOMETRY_HPP
#define RISSIM_GEOMETRY_HPP

#include <cmath>
#include <complex>
#include <numbers>

namespace rissim
{
    using Complex = std::complex<double>;

    inline constexpr double pi = std::numbers::pi;
    inline constexpr double speed_of_light = 299792458.0;  // m/s
    inline constexpr double vacuum_permittivity = 8.8541878128e-12; // F/m

    // Cartesian vector / point in meters
    struct Vec3
    {
        double x = 0.0, y = 0.0, z = 0.0;

        constexpr Vec3 operator+(const Vec3 &o) const { return {x + o.x, y + o.y, z + o.z}; }
        constexpr Vec3 operator-(const Vec3 &o) const { return {x - o.x, y - o.y, z - o.z}; }
        constexpr Vec3 operator-() const { return {-x, -y, -z}; }
        constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
        constexpr Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
        constexpr Vec3 &operator+=(const Vec3 &o)
        {
            x += o.x, y += o.y, z += o.z;
            return *this;
        }
        constexpr bool operator==(const Vec3 &) const = default;
    };

    constexpr Vec3 operator*(double s, const Vec3 &v) { return v * s; }
    constexpr double dot(const Vec3 &a, const Vec3 &b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
    constexpr Vec3 cross(const Vec3 &a, const Vec3 &b)
    {
        return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
    }
    inline double norm(const Vec3 &v) { return std::sqrt(dot(v, v)); }
    inline double distance(const Vec3 &a, const Vec3 &b) { return norm(b - a); }

    // Returns the zero vector when v is zero
    inline Vec3 normalize(const Vec3 &v)
    {
        const double n = norm(v);
        return n > 0.0 ? v / n : Vec3{};
    }

    // Angle between two vectors in [0, pi]; atan2 form stays accurate near 0 and pi
    inline double angle_between(const Vec3 &a, const Vec3 &b)
    {
        return std::atan2(norm(cross(a, b)), dot(a, b));
    }

    // Narrowband carrier
    struct Carrier
    {
        double frequency_hz = 0.0;
        double wavelength_m = 0.0;

        static Carrier from_frequency(double frequency_hz);
        double wavenumber() const { return 2.0 * pi / wavelength_m; }
    };
}

#endif
