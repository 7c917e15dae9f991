// SPDX-License-Identifier: Apache-2.0
//
// risnf - near-field RIS placement and capacity simulator
// Copyright (C) 2026 The risnf authors
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

#include "risnf/commands.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <sys/wait.h>

using namespace risnf;
using namespace risnf::cli;
using Catch::Matchers::ContainsSubstring;
namespace fs = std::filesystem;

namespace
{

struct TempDir
{
    fs::path path;
    TempDir()
    {
        std::random_device rd;
        path = fs::temp_directory_path() / ("risnf_test_" + std::to_string(rd()) + std::to_string(rd()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

CommonArgs quick_args()
{
    CommonArgs a;
    a.preset = "paper-small";
    a.jobs = 2;
    a.overrides = {"ris.elements_x=12", "ris.elements_y=12", "sweep.count=5", "optimizer.starts=3"};
    return a;
}

std::string slurp(const fs::path &p)
{
    std::ifstream f(p, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

std::size_t line_count(const std::string &s)
{
    return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

int run_binary(const std::string &args)
{
    const std::string cmd = std::string(RISNF_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

} // namespace

TEST_CASE("document resolution")
{
    CommonArgs a;
    CHECK_THROWS_AS(resolve_document(a), ConfigError);
    a.preset = "paper-small";
    a.config_path = "x.json";
    CHECK_THROWS_AS(resolve_document(a), ConfigError);
    a.config_path.reset();
    a.seed = 42;
    a.overrides = {"optimizer.seed=5", "sweep.count=7"};
    const auto doc = resolve_document(a, {3.0});
    const auto cfg = to_scenario(doc);
    CHECK(cfg.optimizer.seed == 42);
    CHECK(cfg.sweep.count == 7);
    CHECK(cfg.spacings_lambda == std::vector<double>{3.0});
}

TEST_CASE("sweep command writes the output tree")
{
    TempDir tmp;
    SweepArgs args{quick_args(), (tmp.path / "run").string(), {2.0, 4.0}};
    std::ostringstream out, err;
    REQUIRE(cmd_sweep(args, out, err) == exit_ok);
    CHECK_THAT(out.str(), ContainsSubstring("spacing_2lambda"));
    CHECK_THAT(out.str(), ContainsSubstring("spacing_4lambda"));

    const fs::path run = tmp.path / "run";
    for (const char *dir : {"spacing_2lambda", "spacing_4lambda"})
    {
        const std::string csv = slurp(run / dir / "sweep.csv");
        CHECK(line_count(csv) == 6);
        CHECK(csv.rfind("z_m,capacity_bps_hz,sigma_1", 0) == 0);
    }
    CHECK(line_count(slurp(run / "baseline.csv")) == 3);
    CHECK(line_count(slurp(run / "summary.csv")) == 3);

    const auto manifest = nlohmann::json::parse(slurp(run / "manifest.json"));
    CHECK(manifest["tool"] == "risnf");
    CHECK(manifest["command"] == "sweep");
    CHECK(manifest["seed"] == 2024);
    CHECK(manifest["config_checksum"].get<std::string>().size() == 16);
    CHECK(manifest["outputs"].size() == 5);
    CHECK(manifest.contains("started_utc"));
    CHECK(manifest.contains("finished_utc"));

    // The echoed configuration alone reproduces the run.
    const fs::path echoed = tmp.path / "echo.json";
    std::ofstream(echoed) << manifest["config"].dump(2);
    CommonArgs replay;
    replay.config_path = echoed.string();
    SweepArgs again{replay, (tmp.path / "replay").string(), {}};
    std::ostringstream o2, e2;
    REQUIRE(cmd_sweep(again, o2, e2) == exit_ok);
    for (const char *f : {"spacing_2lambda/sweep.csv", "spacing_4lambda/sweep.csv", "baseline.csv", "summary.csv"})
        CHECK(slurp(run / f) == slurp(tmp.path / "replay" / f));
}

TEST_CASE("sweep output depends only on the seed")
{
    TempDir tmp;
    auto a = quick_args();
    a.jobs = 1;
    auto b = quick_args();
    b.jobs = 3;
    std::ostringstream o, e;
    REQUIRE(cmd_sweep({a, (tmp.path / "a").string(), {2.0}}, o, e) == exit_ok);
    REQUIRE(cmd_sweep({b, (tmp.path / "b").string(), {2.0}}, o, e) == exit_ok);
    CHECK(slurp(tmp.path / "a/spacing_2lambda/sweep.csv") == slurp(tmp.path / "b/spacing_2lambda/sweep.csv"));
    CHECK(slurp(tmp.path / "a/summary.csv") == slurp(tmp.path / "b/summary.csv"));
}

TEST_CASE("configuration errors exit with code 2")
{
    TempDir tmp;
    const fs::path bad = tmp.path / "bad.json";
    std::ofstream(bad) << "{ \"frequency_ghz\": 300, }";
    CommonArgs args;
    args.config_path = bad.string();
    std::ostringstream out, err;
    CHECK(cmd_sweep({args, (tmp.path / "o").string(), {}}, out, err) == exit_config_error);
    CHECK_THAT(err.str(), ContainsSubstring("line 1"));
    CHECK_FALSE(fs::exists(tmp.path / "o"));

    auto typo = quick_args();
    typo.overrides.push_back("sweep.cont=3");
    std::ostringstream e2;
    CHECK(cmd_capacity({typo, 0.0, {}}, out, e2) == exit_config_error);
    CHECK_THAT(e2.str(), ContainsSubstring("sweep.cont"));
}

TEST_CASE("total failure exits with code 3")
{
    TempDir tmp;
    auto args = quick_args();
    // Receiver on the panel plane, on top of RIS element (0, 0), for the only position.
    args.overrides.insert(args.overrides.end(), {"array_center_xy_m=[0,0]", "rx_array.rows=1", "rx_array.cols=1",
                                                 "rx_array.center_z_m=0", "sweep.count=1"});
    std::ostringstream out, err;
    CHECK(cmd_sweep({args, tmp.path.string(), {2.0}}, out, err) == exit_total_failure);
    CHECK_THAT(slurp(tmp.path / "spacing_2lambda/sweep.csv"), ContainsSubstring("failed"));
}

TEST_CASE("capacity command")
{
    auto args = quick_args();
    std::ostringstream out, err;
    REQUIRE(cmd_capacity({args, 0.0, 2.0}, out, err) == exit_ok);
    const auto j = nlohmann::json::parse(out.str());
    CHECK(j["ris_z_m"] == 0.0);
    CHECK(j["seed"] == 2024);
    CHECK(j["capacity_bps_hz"].get<double>() > 0.0);
    CHECK(j["singular_values"].size() == 4);
    CHECK(j["powers_w"].size() == 4);

    // Same numbers as the sweep row at this position.
    const ScenarioConfig cfg = to_scenario(resolve_document(args));
    const SweepRecord rec = evaluate_position(cfg, 2.0, 0.0);
    CHECK(j["capacity_bps_hz"].get<double>() == rec.capacity);

    auto both = quick_args();
    both.overrides.push_back("power_w=0");
    std::ostringstream o2, e2;
    CHECK(cmd_capacity({both, 0.0, 2.0}, o2, e2) == exit_config_error);
    CHECK_THAT(e2.str(), ContainsSubstring("conflicts"));
}

TEST_CASE("capacity with zero power and outside the Fresnel zone")
{
    TempDir tmp;
    auto doc = preset_document("paper-small");
    doc.erase("power_dbm");
    doc["power_w"] = 0.0;
    doc["ris"]["elements_x"] = 12;
    doc["ris"]["elements_y"] = 12;
    doc["optimizer"]["starts"] = 2;
    const fs::path file = tmp.path / "zero.json";
    std::ofstream(file) << doc.dump();
    CommonArgs args;
    args.config_path = file.string();
    std::ostringstream out, err;
    REQUIRE(cmd_capacity({args, 0.0, 2.0}, out, err) == exit_ok);
    CHECK(nlohmann::json::parse(out.str())["capacity_bps_hz"] == 0.0);

    // Transmitter closer than the lower Fresnel bound.
    auto near = preset_document("paper-small");
    near["tx_array"]["center_z_m"] = 0.2;
    near["optimizer"]["starts"] = 2;
    std::ofstream(file) << near.dump();
    std::ostringstream o2, e2;
    REQUIRE(cmd_capacity({args, 0.17, 2.0}, o2, e2) == exit_ok);
    const auto j = nlohmann::json::parse(o2.str());
    CHECK(j["fresnel"]["tx_inside"] == false);
    CHECK(j["fresnel"]["rx_inside"] == true);
    CHECK(j["warning"].is_string());
}

TEST_CASE("baseline command")
{
    auto args = quick_args();
    std::ostringstream out, err;
    REQUIRE(cmd_baseline({args, {1.0, 2.0, 4.0, 7.0, 10.0}, {}}, out, err) == exit_ok);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    CHECK(line.rfind("spacing_lambda,capacity_bps_hz", 0) == 0);
    double prev = 0.0;
    int rows = 0;
    while (std::getline(in, line))
    {
        const auto c1 = line.find(',');
        const auto c2 = line.find(',', c1 + 1);
        const double cap = std::stod(line.substr(c1 + 1, c2 - c1 - 1));
        CHECK(cap >= prev);
        prev = cap;
        ++rows;
    }
    CHECK(rows == 5);

    TempDir tmp;
    std::ostringstream o2;
    REQUIRE(cmd_baseline({args, {2.0}, tmp.path.string()}, o2, err) == exit_ok);
    CHECK(o2.str().empty());
    CHECK(line_count(slurp(tmp.path / "baseline.csv")) == 2);
    CHECK(nlohmann::json::parse(slurp(tmp.path / "manifest.json"))["command"] == "baseline");
}

TEST_CASE("command-line exit codes")
{
    TempDir tmp;
    CHECK(run_binary("--version") == 0);
    CHECK(run_binary("") == 2);
    CHECK(run_binary("sweep --preset paper-small") == 2);
    CHECK(run_binary("frobnicate") == 2);
    CHECK(run_binary("capacity --preset nope --ris-z 0") == 2);
    CHECK(run_binary("baseline --preset paper-small --spacing 2,4 --set sweep.count=3") == 0);
    CHECK(run_binary("capacity --preset paper-small --ris-z 0 --spacing 2 --set ris.elements_x=8 "
                     "--set ris.elements_y=8 --set optimizer.starts=1 --seed 3") == 0);
    CHECK(run_binary("sweep --preset paper-small --out " + (tmp.path / "s").string() +
                     " --spacing 3 --jobs 2 --set ris.elements_x=8 --set ris.elements_y=8 --set sweep.count=2 "
                     "--set optimizer.starts=1") == 0);
    CHECK(fs::exists(tmp.path / "s/spacing_3lambda/sweep.csv"));
}
