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

#ifndef RISSIM_FIXTURES_HPP
#define RISSIM_FIXTURES_HPP

#include <filesystem>
#include <string>
#include <vector>

namespace rissim
{
    // Hex SHA-256 of a byte string
    std::string sha256_hex(const std::string &data);

    struct FixtureReport
    {
        std::vector<std::string> checked;    // "<case>/<file>"
        std::vector<std::string> mismatches; // one readable line per failed file or case

        bool ok() const { return mismatches.empty(); }
    };

    // Each subdirectory of `dir` holding a case.json is one case:
    //   { "command": "coverage", "config": "config.json", "args": [...], "outputs": { "grid.csv": "<sha256>" } }
    // The case is rerun through the CLI into a scratch directory. Every listed output and its golden/ copy
    // must match the recorded digest. With `update` set the digests and golden/ copies are rewritten instead.
    // Throws std::runtime_error when `dir` has no cases.
    FixtureReport verify_fixtures(const std::filesystem::path &dir, bool update = false);
}

#endif
