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

#include "rissim/fixtures.hpp"
#include "rissim/cli.hpp"
#include "rissim/json_io.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <unistd.h>

namespace rissim
{
    std::string sha256_hex(const std::string &data)
    {
        unsigned char md[EVP_MAX_MD_SIZE];
        unsigned int len = 0;
        if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
            throw std::runtime_error("sha256 digest failed");
        static const char *hex = "0123456789abcdef";
        std::string s;
        s.reserve(2 * len);
        for (unsigned int i = 0; i < len; ++i)
        {
            s += hex[md[i] >> 4];
            s += hex[md[i] & 15];
        }
        return s;
    }

    namespace
    {
        std::string slurp(const std::filesystem::path &p)
        {
            std::ifstream in(p, std::ios::binary);
            if (!in)
                throw std::runtime_error("cannot read '" + p.string() + "'");
            std::ostringstream ss;
            ss << in.rdbuf();
            return ss.str();
        }
    }

    FixtureReport verify_fixtures(const std::filesystem::path &dir, bool update)
    {
        namespace fs = std::filesystem;
        if (!fs::is_directory(dir))
            throw std::runtime_error("fixture directory '" + dir.string() + "' does not exist");

        std::vector<fs::path> cases;
        for (const auto &entry : fs::directory_iterator(dir))
            if (entry.is_directory() && fs::exists(entry.path() / "case.json"))
                cases.push_back(entry.path());
        if (cases.empty())
            throw std::runtime_error("no fixture cases under '" + dir.string() + "'");
        std::sort(cases.begin(), cases.end());

        const fs::path scratch_root = fs::temp_directory_path() / ("rissim-fixtures-" + std::to_string(::getpid()));
        FixtureReport report;
        for (const auto &case_dir : cases)
        {
            const std::string name = case_dir.filename().string();
            json spec = json::parse(slurp(case_dir / "case.json"));

            const fs::path scratch = scratch_root / name;
            fs::remove_all(scratch);
            fs::create_directories(scratch);

            std::vector<std::string> args{spec.at("command").get<std::string>(), "--config",
                                          (case_dir / spec.at("config").get<std::string>()).string(),
                                          "--out", scratch.string()};
            if (spec.contains("args"))
                for (const auto &a : spec["args"])
                    args.push_back(a.get<std::string>());

            std::ostringstream out, err;
            const int code = cli::dispatch(args, out, err);
            if (code != cli::exit_ok)
            {
                report.mismatches.push_back(name + ": exit code " + std::to_string(code) + ": " + err.str());
                continue;
            }

            json &outputs = spec["outputs"];
            for (auto it = outputs.begin(); it != outputs.end(); ++it)
            {
                const std::string file = it.key();
                const fs::path produced = scratch / file;
                if (!fs::exists(produced))
                {
                    report.mismatches.push_back(name + "/" + file + ": not produced");
                    continue;
                }
                const std::string content = slurp(produced);
                const std::string digest = sha256_hex(content);
                report.checked.push_back(name + "/" + file);
                if (update)
                {
                    it.value() = digest;
                    fs::create_directories(case_dir / "golden");
                    cli::write_file_atomic(case_dir / "golden" / file, content);
                }
                else
                {
                    const std::string recorded = it.value().get<std::string>();
                    if (digest != recorded)
                        report.mismatches.push_back(name + "/" + file + ": digest " + digest + " != recorded " + recorded);
                    const fs::path golden = case_dir / "golden" / file;
                    if (!fs::exists(golden))
                        report.mismatches.push_back(name + "/golden/" + file + ": missing");
                    else if (sha256_hex(slurp(golden)) != recorded)
                        report.mismatches.push_back(name + "/golden/" + file + ": differs from recorded digest");
                }
            }
            if (update)
                cli::write_file_atomic(case_dir / "case.json", spec.dump(2) + "\n");
        }
        fs::remove_all(scratch_root);
        return report;
    }
}
