// SPDX-License-Identifier: Apache-2.0
//
// v2xmpc: multipath-component statistics for vehicular mmWave channel traces
// Copyright (C) 2026 The v2xmpc authors
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

#include <catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "v2xmpc/trajectory_io.hpp"

namespace fs = std::filesystem;

namespace
{
    int run(const std::string &args)
    {
        const std::string cmd = std::string(V2XMPC_CLI) + " " + args + " >cli_stdout.txt 2>cli_stderr.txt";
        const int status = std::system(cmd.c_str());
        REQUIRE(WIFEXITED(status));
        return WEXITSTATUS(status);
    }

    std::string slurp(const fs::path &p)
    {
        std::ifstream in(p);
        std::stringstream s;
        s << in.rdbuf();
        return s.str();
    }

    void write(const fs::path &p, const std::string &text)
    {
        std::ofstream(p) << text;
    }
}

TEST_CASE("CLI end to end")
{
    const fs::path dir = "cli_work";
    fs::remove_all(dir);
    fs::create_directories(dir);
    const std::string traj = (dir / "f6.csv").string();

    REQUIRE(run("synth --out " + traj) == 0);
    CHECK(slurp(traj).rfind(std::string(v2xmpc::kTrajectoryMagic), 0) == 0);

    REQUIRE(run("validate " + traj) == 0);
    CHECK(slurp("cli_stdout.txt").find("100") != std::string::npos);

    REQUIRE(run("pipeline " + traj + " -o " + (dir / "out").string()) == 0);
    for (const char *name : {"mpct_sweep.csv", "path_loss.csv", "spread_vs_bew.csv", "weighted_spread.csv",
                             "cone_fractions.csv", "cone_tracks.csv", "blockage.csv"})
    {
        INFO(name);
        CHECK(fs::file_size(dir / "out" / name) > 0);
    }

    // single-stage commands produce the same bytes as the full pipeline
    REQUIRE(run("stats " + traj + " --threads 2 -o " + (dir / "stats").string()) == 0);
    CHECK(slurp(dir / "stats" / "path_loss.csv") == slurp(dir / "out" / "path_loss.csv"));
    CHECK(slurp(dir / "stats" / "spread_vs_bew.csv") == slurp(dir / "out" / "spread_vs_bew.csv"));
    REQUIRE(run("cones " + traj + " -o " + (dir / "cones").string()) == 0);
    CHECK(slurp(dir / "cones" / "cone_fractions.csv") == slurp(dir / "out" / "cone_fractions.csv"));
    REQUIRE(run("blockage " + traj + " -o " + (dir / "blockage").string()) == 0);
    CHECK(slurp(dir / "blockage" / "blockage.csv") == slurp(dir / "out" / "blockage.csv"));

    // a second band from a scene file, then the cross-band comparison
    write(dir / "scene.json", R"({"freq_ghz": 73, "band_label": "f7"})");
    const std::string other = (dir / "f7.csv").string();
    REQUIRE(run("synth --scene " + (dir / "scene.json").string() + " --out " + other) == 0);
    REQUIRE(run("congruency " + traj + " " + other + " -o " + (dir / "cong").string()) == 0);
    const std::string cong = slurp(dir / "cong" / "congruency.csv");
    CHECK(cong.rfind("location_index,band_a,band_b,offset_deg\n1,f6,f7,0\n", 0) == 0);
    REQUIRE(run("cones " + other + " --hint " + traj + " -o " + (dir / "hinted").string()) == 0);

    // overrides and a config file
    write(dir / "config.json", R"({"mpct_db": 20, "cone_hpbw": [[15, 15]]})");
    REQUIRE(run("cones " + traj + " --config " + (dir / "config.json").string() + " --cone-hpbw 20:20 -o " +
                (dir / "cfg").string()) == 0);
    CHECK(slurp(dir / "cfg" / "cone_fractions.csv").find(",20,20,") != std::string::npos);

    CHECK(run("--version") == 0);
    CHECK(slurp("cli_stdout.txt").find("trajectory format v1") != std::string::npos);
    CHECK(run("--help") == 0);
    fs::remove_all(dir);
}

TEST_CASE("CLI exit codes")
{
    const fs::path dir = "cli_errors";
    fs::remove_all(dir);
    fs::create_directories(dir);
    REQUIRE(run("synth --out " + (dir / "ok.csv").string()) == 0);

    SECTION("malformed input exits with 2")
    {
        write(dir / "bad.csv", "# v2xmpc trajectory v1\nband,f6\nfreq_ghz,oops\n");
        CHECK(run("validate " + (dir / "bad.csv").string()) == 2);
        CHECK(slurp("cli_stderr.txt").find(":3:") != std::string::npos);
        CHECK(slurp("cli_stderr.txt").find("freq_ghz") != std::string::npos);
        CHECK(run("pipeline " + (dir / "missing.csv").string()) == 2);
        write(dir / "scene.json", R"({"street": 1})");
        CHECK(run("synth --scene " + (dir / "scene.json").string()) == 2);
    }

    SECTION("bad configuration exits with 3")
    {
        CHECK(run("pipeline " + (dir / "ok.csv").string() + " --mpct-db -5") == 3);
        CHECK(run("cones " + (dir / "ok.csv").string() + " --cone-hpbw 10") == 3);
        CHECK(run("cones " + (dir / "ok.csv").string() + " --max-cones 0") == 3);
        write(dir / "config.json", R"({"bogus": 1})");
        CHECK(run("stats " + (dir / "ok.csv").string() + " --config " + (dir / "config.json").string()) == 3);
        CHECK(run("frobnicate") == 3);
        CHECK(run("") == 3);
        write(dir / "scene.json", R"({"nlos_points": 1000})");
        CHECK(run("synth --scene " + (dir / "scene.json").string()) == 3);
    }

    SECTION("computation failures exit with 4")
    {
        // different location sets cannot be compared
        write(dir / "short.csv", "# v2xmpc trajectory v1\nband,f6\nfreq_ghz,28\ntx_power_dbm,0\nnlos_through,0\n" +
                                     std::string(v2xmpc::kTrajectoryColumns) + "\n1,-60,0,0,0,0,0,0,0,0\n");
        CHECK(run("congruency " + (dir / "ok.csv").string() + " " + (dir / "short.csv").string()) == 4);
    }
    fs::remove_all(dir);
}
