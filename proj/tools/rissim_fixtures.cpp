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

// Re-runs every fixture case and compares output digests.

#include "rissim/fixtures.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char **argv)
{
    CLI::App app{"Regenerate fixture outputs and compare digests", "rissim_fixtures"};
    std::string dir = "fixtures";
    bool update = false;
    app.add_option("dir", dir, "Fixture directory");
    app.add_flag("--update", update, "Rewrite recorded digests and golden copies");
    CLI11_PARSE(app, argc, argv);

    try
    {
        const auto report = rissim::verify_fixtures(dir, update);
        for (const auto &c : report.checked)
            std::cout << (update ? "updated " : "checked ") << c << "\n";
        for (const auto &m : report.mismatches)
            std::cout << "MISMATCH " << m << "\n";
        std::cout << report.checked.size() << " outputs, " << report.mismatches.size() << " mismatches\n";
        return report.ok() ? 0 : 1;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
