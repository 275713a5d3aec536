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

#ifndef RISSIM_CLI_HPP
#define RISSIM_CLI_HPP

#include "rissim/chamber.hpp"
#include "rissim/coverage.hpp"

#include <filesystem>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace rissim::cli
{
    inline constexpr const char *tool_name = "rissim";
    inline constexpr const char *tool_version = "0.1.0";

    enum exit_code : int
    {
        exit_ok = 0,
        exit_usage = 2,
        exit_config = 3,
        exit_runtime = 4
    };

    // Runs one subcommand (coverage | pdp | chamber | ffcheck). `args` excludes the program name.
    int dispatch(std::span<const std::string> args, std::ostream &out, std::ostream &err);

    // Fixed-point text; non-finite values print as -inf / inf / nan
    std::string format_fixed(double value, int decimals);

    // Writes to a sibling temporary file, then renames over the target
    void write_file_atomic(const std::filesystem::path &path, const std::string &content);

    std::string grid_csv(const CoverageGrid &grid);
    std::string stats_csv(const CoverageGrid &grid, const CoverageGrid *baseline);
    std::string cdf_csv(const Cdf &c);
    std::string pdp_csv(const Pdp &pdp);
    std::string sweep_csv(const SweepResult &sweep);
    std::string lobes_csv(const std::vector<Lobe> &lobes);
}

#endif
