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

#ifndef RISSIM_ERROR_HPP
#define RISSIM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace rissim
{
    // Malformed structured-text input
    class parse_error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // Input parses but violates a documented invariant
    class validation_error : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    // Factory racks overlap or do not fit on the floor
    class layout_error : public validation_error
    {
    public:
        using validation_error::validation_error;
    };

    // Failures during a simulation run (reflection cap, far-field violation in strict mode, ...)
    class simulation_error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };
}

#endif
