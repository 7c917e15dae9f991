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

#include "risnf/config.hpp"

#include <fstream>
#include <sstream>

using namespace risnf;
using Catch::Approx;
using Catch::Matchers::ContainsSubstring;

namespace
{

ConfigDocument small()
{
    return preset_document("paper-small");
}

std::string error_of(const ConfigDocument &doc)
{
    try
    {
        to_scenario(doc);
    }
    catch (const ConfigError &e)
    {
        return e.what();
    }
    return {};
}

} // namespace

TEST_CASE("unit conversions")
{
    CHECK(dbm_to_watts(10.0) == Approx(0.01).epsilon(1e-15));
    CHECK(dbm_to_watts(-90.0) == Approx(1e-12).epsilon(1e-15));
    CHECK(dbm_to_watts(30.0) == Approx(1.0).epsilon(1e-15));
    CHECK(db_to_linear(20.0) == Approx(100.0).epsilon(1e-15));
    CHECK(db_to_linear(0.0) == 1.0);
}

TEST_CASE("presets map to the reference scenario")
{
    for (const auto &name : preset_names())
    {
        const ScenarioConfig cfg = to_scenario(preset_document(name));
        const double lambda = speed_of_light / 300e9;
        CHECK(cfg.physics.frequency == 300e9);
        CHECK(cfg.physics.wavelength == Approx(lambda).epsilon(1e-15));
        CHECK(cfg.physics.absorption == 0.0033);
        CHECK(cfg.physics.tx_gain == Approx(100.0).epsilon(1e-14));
        CHECK(cfg.physics.rx_gain == Approx(100.0).epsilon(1e-14));
        CHECK(cfg.power == Approx(0.01).epsilon(1e-14));
        CHECK(cfg.noise == Approx(1e-12).epsilon(1e-14));
        CHECK(cfg.tx.rows == 2);
        CHECK(cfg.rx.cols == 2);
        CHECK(cfg.tx.center.z == 0.2629);
        CHECK(cfg.rx.center.z == -0.2629);
        CHECK(cfg.panel.elements_x == 40);
        CHECK(cfg.panel.elements_y == 40);
        CHECK(cfg.panel.element_width == Approx(lambda / 2).epsilon(1e-15));
        CHECK(cfg.panel.gap_y == Approx(lambda / 8).epsilon(1e-15));
        CHECK(cfg.tx.center.x == Approx(cfg.panel.centroid().x).epsilon(1e-15));
        CHECK(cfg.rx.center.y == Approx(cfg.panel.centroid().y).epsilon(1e-15));
        CHECK(cfg.sweep.z_min == -0.186);
        CHECK(cfg.sweep.z_max == 0.186);
        CHECK(cfg.sweep.placement == Placement::Midpoints);
        CHECK(cfg.optimizer.gamma == 1e-5);
        CHECK(cfg.optimizer.max_iterations == 200);
        CHECK(cfg.include_baseline);
    }
    const ScenarioConfig full = to_scenario(preset_document("paper-full"));
    CHECK(full.sweep.count == 50);
    CHECK(full.optimizer.starts == 100);
    CHECK(full.spacings_lambda == std::vector<double>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
    const ScenarioConfig sm = to_scenario(preset_document("paper-small"));
    CHECK(sm.sweep.count == 11);
    CHECK(sm.spacings_lambda == std::vector<double>{2, 4, 7, 10});

    CHECK_THROWS_AS(preset_document("paper-huge"), ConfigError);
}

TEST_CASE("shipped preset files match the built-in presets")
{
    for (const auto &name : preset_names())
    {
        const auto doc = load_config_file(std::string(RISNF_SOURCE_DIR) + "/presets/" + name + ".json");
        CHECK(doc == preset_document(name));
    }
}

TEST_CASE("alternative units")
{
    auto doc = small();
    doc.erase("frequency_ghz");
    doc["frequency_hz"] = 300e9;
    doc.erase("power_dbm");
    doc["power_w"] = 0.01;
    doc.erase("tx_gain_dbi");
    doc["tx_gain_linear"] = 100.0;
    doc["ris"].erase("gap_x_lambda");
    doc["ris"]["gap_x_m"] = 1e-4;
    const ScenarioConfig cfg = to_scenario(doc);
    CHECK(cfg.physics.frequency == 300e9);
    CHECK(cfg.power == 0.01);
    CHECK(cfg.physics.tx_gain == 100.0);
    CHECK(cfg.panel.gap_x == 1e-4);

    doc["array_center_xy_m"] = {0.001, 0.002};
    const ScenarioConfig moved = to_scenario(doc);
    CHECK(moved.tx.center.x == 0.001);
    CHECK(moved.rx.center.y == 0.002);
}

TEST_CASE("diagnostics name the offending field")
{
    auto doc = small();
    doc["ris"]["elemnts_x"] = 3;
    CHECK_THAT(error_of(doc), ContainsSubstring("ris.elemnts_x") && ContainsSubstring("unknown key"));

    doc = small();
    doc["bogus"] = 1;
    CHECK_THAT(error_of(doc), ContainsSubstring("bogus"));

    doc = small();
    doc["sweep"].erase("count");
    CHECK_THAT(error_of(doc), ContainsSubstring("sweep.count") && ContainsSubstring("missing"));

    doc = small();
    doc["power_w"] = 0.01;
    CHECK_THAT(error_of(doc), ContainsSubstring("power_w") && ContainsSubstring("conflicts"));

    doc = small();
    doc.erase("noise_dbm");
    CHECK_THAT(error_of(doc), ContainsSubstring("noise"));

    doc = small();
    doc["sweep"]["count"] = -3;
    CHECK_THAT(error_of(doc), ContainsSubstring("sweep.count"));

    doc = small();
    doc["sweep"]["z_max_m"] = -0.5;
    CHECK_THAT(error_of(doc), ContainsSubstring("sweep.z_max_m"));

    doc = small();
    doc["spacings_lambda"] = {2, 0};
    CHECK_THAT(error_of(doc), ContainsSubstring("spacings_lambda[1]"));

    doc = small();
    doc["frequency_ghz"] = "300";
    CHECK_THAT(error_of(doc), ContainsSubstring("frequency_ghz") && ContainsSubstring("number"));

    doc = small();
    doc["sweep"]["placement"] = "edges";
    CHECK_THAT(error_of(doc), ContainsSubstring("sweep.placement"));

    doc = small();
    doc["rx_array"]["center_z_m"] = 0.2629;
    CHECK_THAT(error_of(doc), ContainsSubstring("rx_array.center_z_m"));
}

TEST_CASE("syntax errors carry a position")
{
    try
    {
        parse_config_text("{\n  \"frequency_ghz\": 300,\n  \"power_dbm\": ,\n}");
        FAIL("expected a syntax error");
    }
    catch (const ConfigError &e)
    {
        CHECK_THAT(e.what(), ContainsSubstring("line 3"));
    }
    CHECK_THROWS_AS(load_config_file("/nonexistent/risnf.json"), ConfigError);
}

TEST_CASE("dotted overrides")
{
    auto doc = small();
    apply_override(doc, "sweep.count=3");
    apply_override(doc, "optimizer.seed=99");
    apply_override(doc, "sweep.placement=endpoints");
    apply_override(doc, "spacings_lambda=[3,5]");
    const ScenarioConfig cfg = to_scenario(doc);
    CHECK(cfg.sweep.count == 3);
    CHECK(cfg.optimizer.seed == 99);
    CHECK(cfg.sweep.placement == Placement::Endpoints);
    CHECK(cfg.spacings_lambda == std::vector<double>{3, 5});

    CHECK_THROWS_AS(apply_override(doc, "sweep.count"), ConfigError);
    CHECK_THROWS_AS(apply_override(doc, "=3"), ConfigError);
    CHECK_THROWS_AS(apply_override(doc, "sweep..count=3"), ConfigError);
    CHECK_THROWS_AS(apply_override(doc, "sweep.count.x=3"), ConfigError);

    apply_override(doc, "sweep.typo=1");
    CHECK_THAT(error_of(doc), ContainsSubstring("sweep.typo"));
}

TEST_CASE("echoed configuration reproduces the scenario")
{
    for (const auto &name : preset_names())
    {
        auto doc = preset_document(name);
        apply_override(doc, "optimizer.seed=7");
        const std::string echoed = doc.dump(2);
        const auto again = parse_config_text(echoed);
        CHECK(to_scenario(again) == to_scenario(doc));
        CHECK(config_checksum(again) == config_checksum(doc));
    }
    auto a = small();
    auto b = small();
    apply_override(b, "optimizer.seed=1");
    CHECK(config_checksum(a) != config_checksum(b));
    CHECK(config_checksum(a).size() == 16);
}
