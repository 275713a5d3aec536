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

#include "rissim/fixtures.hpp"

#include <doctest.h>

#include <fstream>
#include <set>

#include <unistd.h>

using namespace rissim;
namespace fs = std::filesystem;

namespace
{
    fs::path copy_cases(const std::string &tag, std::initializer_list<const char *> cases)
    {
        const fs::path root = fs::temp_directory_path() / ("rissim-fx-" + tag + "-" + std::to_string(::getpid()));
        fs::remove_all(root);
        fs::create_directories(root);
        const fs::path src = fs::path(test::source_dir) / "fixtures";
        fs::copy(src / "scenes", root / "scenes", fs::copy_options::recursive);
        for (const char *c : cases)
            fs::copy(src / c, root / c, fs::copy_options::recursive);
        return root;
    }
}

TEST_CASE("sha256_hex")
{
    CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("verify_fixtures: pristine copies pass")
{
    const fs::path root = copy_cases("ok", {"chamber_3p7ghz_32x32", "pdp_3p7ghz_32x32", "ffcheck_3p7ghz_32x32"});
    const auto report = verify_fixtures(root);
    CHECK(report.ok());
    CHECK(report.checked.size() == 4);
    fs::remove_all(root);
}

TEST_CASE("verify_fixtures: a perturbed golden file is named")
{
    const fs::path root = copy_cases("bad", {"pdp_3p7ghz_32x32", "ffcheck_3p7ghz_32x32"});
    std::ofstream(root / "pdp_3p7ghz_32x32" / "golden" / "pdp.csv", std::ios::app) << "0.0000,-1.00,ris\n";
    const auto report = verify_fixtures(root);
    REQUIRE(report.mismatches.size() == 1);
    CHECK(report.mismatches[0].find("pdp_3p7ghz_32x32/golden/pdp.csv") != std::string::npos);
    fs::remove_all(root);
}

TEST_CASE("verify_fixtures: a changed config shows up as an output mismatch")
{
    const fs::path root = copy_cases("cfg", {"ffcheck_3p7ghz_32x32"});
    const fs::path cfg = root / "ffcheck_3p7ghz_32x32" / "config.json";
    std::ifstream in(cfg);
    std::string text((std::istreambuf_iterator<char>(in)), {});
    in.close();
    text.replace(text.find("\"nx\": 32"), 8, "\"nx\": 31");
    std::ofstream(cfg) << text;
    const auto report = verify_fixtures(root);
    REQUIRE_FALSE(report.ok());
    CHECK(report.mismatches[0].find("ffcheck_3p7ghz_32x32/ffcheck.csv") != std::string::npos);
    fs::remove_all(root);
}

TEST_CASE("verify_fixtures: empty or missing directory")
{
    const fs::path empty = fs::temp_directory_path() / ("rissim-fx-empty-" + std::to_string(::getpid()));
    fs::create_directories(empty);
    CHECK_THROWS(verify_fixtures(empty));
    fs::remove_all(empty);
    CHECK_THROWS(verify_fixtures(empty));
}

TEST_CASE("fixture set covers every subcommand")
{
    std::set<std::string> commands;
    for (const auto &e : fs::directory_iterator(fs::path(test::source_dir) / "fixtures"))
        if (fs::exists(e.path() / "case.json"))
        {
            std::ifstream in(e.path() / "case.json");
            std::string text((std::istreambuf_iterator<char>(in)), {});
            for (const char *c : {"coverage", "pdp", "chamber", "ffcheck"})
                if (text.find(std::string("\"command\": \"") + c + "\"") != std::string::npos)
                    commands.insert(c);
        }
    CHECK(commands.size() == 4);
}
