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

#include "risnf/config.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace risnf
{

using nlohmann::json;

namespace
{

constexpr std::string_view paper_full_json = R"({
  "frequency_ghz": 300,
  "absorption_per_m": 0.0033,
  "tx_gain_dbi": 20,
  "rx_gain_dbi": 20,
  "power_dbm": 10,
  "noise_dbm": -90,
  "tx_array": { "rows": 2, "cols": 2, "center_z_m": 0.2629 },
  "rx_array": { "rows": 2, "cols": 2, "center_z_m": -0.2629 },
  "ris": {
    "elements_x": 40, "elements_y": 40,
    "element_width_lambda": 0.5, "element_length_lambda": 0.5,
    "gap_x_lambda": 0.125, "gap_y_lambda": 0.125
  },
  "sweep": { "z_min_m": -0.186, "z_max_m": 0.186, "count": 50, "placement": "midpoints" },
  "spacings_lambda": [1, 2, 3, 4, 5, 6, 7, 8, 9, 10],
  "optimizer": { "starts": 100, "gamma": 1e-5, "max_iterations": 200, "seed": 2024 },
  "include_los_baseline": true
})";

constexpr std::string_view paper_small_json = R"({
  "frequency_ghz": 300,
  "absorption_per_m": 0.0033,
  "tx_gain_dbi": 20,
  "rx_gain_dbi": 20,
  "power_dbm": 10,
  "noise_dbm": -90,
  "tx_array": { "rows": 2, "cols": 2, "center_z_m": 0.2629 },
  "rx_array": { "rows": 2, "cols": 2, "center_z_m": -0.2629 },
  "ris": {
    "elements_x": 40, "elements_y": 40,
    "element_width_lambda": 0.5, "element_length_lambda": 0.5,
    "gap_x_lambda": 0.125, "gap_y_lambda": 0.125
  },
  "sweep": { "z_min_m": -0.186, "z_max_m": 0.186, "count": 11, "placement": "midpoints" },
  "spacings_lambda": [2, 4, 7, 10],
  "optimizer": { "starts": 10, "gamma": 1e-5, "max_iterations": 200, "seed": 2024 },
  "include_los_baseline": true
})";

// Reads one JSON object, remembering which keys were consumed so that leftovers
// (typos, unsupported options) can be rejected.
class FieldReader
{
  public:
    FieldReader(const json &obj, std::string path) : obj_(obj), path_(std::move(path))
    {
        if (!obj_.is_object())
            fail(path_.empty() ? "<root>" : path_, "expected an object");
    }

    [[noreturn]] static void fail(const std::string &field, const std::string &what)
    {
        throw ConfigError("field '" + field + "': " + what);
    }

    std::string name(std::string_view key) const
    {
        return path_.empty() ? std::string(key) : path_ + "." + std::string(key);
    }

    bool has(std::string_view key) const { return obj_.contains(std::string(key)); }

    const json &raw(std::string_view key)
    {
        used_.insert(std::string(key));
        return obj_.at(std::string(key));
    }

    double number(std::string_view key)
    {
        if (!has(key))
            fail(name(key), "missing");
        const json &v = raw(key);
        if (!v.is_number())
            fail(name(key), "expected a number");
        const double d = v.get<double>();
        if (!std::isfinite(d))
            fail(name(key), "must be finite");
        return d;
    }

    std::optional<double> optional_number(std::string_view key)
    {
        if (!has(key) || obj_.at(std::string(key)).is_null())
        {
            if (has(key))
                used_.insert(std::string(key));
            return std::nullopt;
        }
        return number(key);
    }

    std::uint64_t unsigned_integer(std::string_view key, std::uint64_t min_value)
    {
        if (!has(key))
            fail(name(key), "missing");
        const json &v = raw(key);
        if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() && v.get<std::int64_t>() < 0))
            fail(name(key), "expected a non-negative integer");
        const auto u = v.get<std::uint64_t>();
        if (u < min_value)
            fail(name(key), "must be >= " + std::to_string(min_value));
        return u;
    }

    bool boolean(std::string_view key, bool fallback)
    {
        if (!has(key))
            return fallback;
        const json &v = raw(key);
        if (!v.is_boolean())
            fail(name(key), "expected true or false");
        return v.get<bool>();
    }

    std::string string(std::string_view key, std::string fallback)
    {
        if (!has(key))
            return fallback;
        const json &v = raw(key);
        if (!v.is_string())
            fail(name(key), "expected a string");
        return v.get<std::string>();
    }

    // Exactly one of base + suffix for the given suffixes must be present.
    std::pair<std::string, double> one_of(std::string_view base, std::initializer_list<std::string_view> suffixes)
    {
        std::optional<std::pair<std::string, double>> found;
        std::string options;
        for (auto suffix : suffixes)
        {
            const std::string key = std::string(base) + std::string(suffix);
            options += (options.empty() ? "" : " or ") + name(key);
            if (!has(key))
                continue;
            if (found)
                fail(name(key), "conflicts with '" + name(found->first) + "'");
            found.emplace(key, number(key));
        }
        if (!found)
            fail(name(std::string(base) + "*"), "missing, expected " + options);
        return *found;
    }

    void finish() const
    {
        for (const auto &[key, value] : obj_.items())
            if (!used_.contains(key))
                fail(name(key), "unknown key");
    }

  private:
    const json &obj_;
    std::string path_;
    std::set<std::string> used_;
};

double read_length(FieldReader &f, std::string_view base, double wavelength)
{
    const auto [key, value] = f.one_of(base, {"_m", "_lambda"});
    return key.ends_with("_lambda") ? value * wavelength : value;
}

PlanarArray read_array(const json &doc, const std::string &key, std::optional<double> &spacing_lambda)
{
    if (!doc.contains(key))
        FieldReader::fail(key, "missing");
    FieldReader f(doc.at(key), key);
    PlanarArray arr;
    arr.rows = f.unsigned_integer("rows", 1);
    arr.cols = f.unsigned_integer("cols", 1);
    arr.center.z = f.number("center_z_m");
    spacing_lambda = f.optional_number("spacing_lambda");
    if (spacing_lambda && !(*spacing_lambda > 0.0))
        FieldReader::fail(f.name("spacing_lambda"), "must be positive");
    f.finish();
    return arr;
}

} // namespace

double dbm_to_watts(double dbm)
{
    return 1e-3 * std::pow(10.0, dbm / 10.0);
}

double db_to_linear(double db)
{
    return std::pow(10.0, db / 10.0);
}

ConfigDocument parse_config_text(std::string_view text)
{
    try
    {
        return json::parse(text.begin(), text.end());
    }
    catch (const json::parse_error &e)
    {
        // e.what() carries "at line L, column C".
        throw ConfigError(std::string("syntax error: ") + e.what());
    }
}

ConfigDocument load_config_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    try
    {
        return parse_config_text(ss.str());
    }
    catch (const ConfigError &e)
    {
        throw ConfigError(path + ": " + e.what());
    }
}

std::vector<std::string> preset_names()
{
    return {"paper-full", "paper-small"};
}

ConfigDocument preset_document(std::string_view name)
{
    if (name == "paper-full")
        return json::parse(paper_full_json);
    if (name == "paper-small")
        return json::parse(paper_small_json);
    throw ConfigError("unknown preset '" + std::string(name) + "' (expected paper-full or paper-small)");
}

void apply_override(ConfigDocument &doc, std::string_view assignment)
{
    const auto eq = assignment.find('=');
    if (eq == std::string_view::npos || eq == 0)
        throw ConfigError("override '" + std::string(assignment) + "': expected key=value");
    const std::string path(assignment.substr(0, eq));
    const std::string text(assignment.substr(eq + 1));

    json value;
    try
    {
        value = json::parse(text);
    }
    catch (const json::parse_error &)
    {
        value = text;
    }

    json *node = &doc;
    std::size_t begin = 0;
    while (true)
    {
        const auto dot = path.find('.', begin);
        const std::string key = path.substr(begin, dot == std::string::npos ? std::string::npos : dot - begin);
        if (key.empty())
            throw ConfigError("override '" + path + "': empty path component");
        if (!node->is_object())
            throw ConfigError("override '" + path + "': '" + key + "' is not inside an object");
        if (dot == std::string::npos)
        {
            (*node)[key] = std::move(value);
            return;
        }
        node = &(*node)[key];
        if (node->is_null())
            *node = json::object();
        begin = dot + 1;
    }
}

ScenarioConfig to_scenario(const ConfigDocument &doc)
{
    FieldReader root(doc, "");
    ScenarioConfig cfg;

    const auto [fkey, fval] = root.one_of("frequency", {"_ghz", "_hz"});
    const double frequency = fkey.ends_with("_ghz") ? fval * 1e9 : fval;
    if (!(frequency > 0.0))
        FieldReader::fail(fkey, "must be positive");

    const double absorption = root.number("absorption_per_m");
    if (absorption < 0.0)
        FieldReader::fail("absorption_per_m", "must be >= 0");

    const auto gain = [&](std::string_view base) {
        const auto [key, value] = root.one_of(base, {"_dbi", "_linear"});
        const double g = key.ends_with("_dbi") ? db_to_linear(value) : value;
        if (!(g > 0.0))
            FieldReader::fail(key, "must be positive");
        return g;
    };
    const double tx_gain = gain("tx_gain");
    const double rx_gain = gain("rx_gain");
    cfg.physics = PhysicalParams::from_frequency(frequency, absorption, tx_gain, rx_gain);
    const double lambda = cfg.physics.wavelength;

    const auto power = [&](std::string_view base) {
        const auto [key, value] = root.one_of(base, {"_dbm", "_w"});
        const double w = key.ends_with("_dbm") ? dbm_to_watts(value) : value;
        if (w < 0.0)
            FieldReader::fail(key, "must be >= 0");
        return w;
    };
    cfg.power = power("power");
    cfg.noise = power("noise");
    if (!(cfg.noise > 0.0))
        FieldReader::fail("noise_dbm/noise_w", "noise power must be positive");

    cfg.tx = read_array(doc, "tx_array", cfg.tx_spacing_lambda);
    cfg.rx = read_array(doc, "rx_array", cfg.rx_spacing_lambda);
    root.raw("tx_array");
    root.raw("rx_array");
    if (cfg.tx.center.z == cfg.rx.center.z)
        FieldReader::fail("rx_array.center_z_m", "must differ from tx_array.center_z_m");

    if (!root.has("ris"))
        FieldReader::fail("ris", "missing");
    {
        FieldReader f(root.raw("ris"), "ris");
        cfg.panel.elements_x = f.unsigned_integer("elements_x", 1);
        cfg.panel.elements_y = f.unsigned_integer("elements_y", 1);
        cfg.panel.element_width = read_length(f, "element_width", lambda);
        cfg.panel.element_length = read_length(f, "element_length", lambda);
        cfg.panel.gap_x = read_length(f, "gap_x", lambda);
        cfg.panel.gap_y = read_length(f, "gap_y", lambda);
        f.finish();
        if (!(cfg.panel.element_width > 0.0) || !(cfg.panel.element_length > 0.0))
            FieldReader::fail("ris.element_*", "element dimensions must be positive");
        if (cfg.panel.gap_x < 0.0 || cfg.panel.gap_y < 0.0)
            FieldReader::fail("ris.gap_*", "gaps must be >= 0");
    }

    // Terminal centres line up with the panel centroid unless given explicitly.
    const CartesianPoint centroid = cfg.panel.centroid();
    double cx = centroid.x, cy = centroid.y;
    if (root.has("array_center_xy_m"))
    {
        const json &xy = root.raw("array_center_xy_m");
        if (!xy.is_null())
        {
            if (!xy.is_array() || xy.size() != 2 || !xy[0].is_number() || !xy[1].is_number())
                FieldReader::fail("array_center_xy_m", "expected [x, y] in meters");
            cx = xy[0].get<double>();
            cy = xy[1].get<double>();
        }
    }
    cfg.tx.center.x = cfg.rx.center.x = cx;
    cfg.tx.center.y = cfg.rx.center.y = cy;
    // Placeholder, replaced per study spacing.
    cfg.tx.spacing = cfg.rx.spacing = lambda;

    if (!root.has("sweep"))
        FieldReader::fail("sweep", "missing");
    {
        FieldReader f(root.raw("sweep"), "sweep");
        cfg.sweep.z_min = f.number("z_min_m");
        cfg.sweep.z_max = f.number("z_max_m");
        cfg.sweep.count = f.unsigned_integer("count", 1);
        const std::string placement = f.string("placement", "midpoints");
        if (placement == "midpoints")
            cfg.sweep.placement = Placement::Midpoints;
        else if (placement == "endpoints")
            cfg.sweep.placement = Placement::Endpoints;
        else
            FieldReader::fail("sweep.placement", "expected \"midpoints\" or \"endpoints\"");
        f.finish();
        if (!(cfg.sweep.z_min < cfg.sweep.z_max))
            FieldReader::fail("sweep.z_max_m", "must be greater than sweep.z_min_m");
    }

    if (!root.has("spacings_lambda"))
        FieldReader::fail("spacings_lambda", "missing");
    {
        const json &list = root.raw("spacings_lambda");
        if (!list.is_array() || list.empty())
            FieldReader::fail("spacings_lambda", "expected a non-empty array of numbers");
        for (std::size_t i = 0; i < list.size(); ++i)
        {
            if (!list[i].is_number() || !(list[i].get<double>() > 0.0))
                FieldReader::fail("spacings_lambda[" + std::to_string(i) + "]", "expected a positive number");
            cfg.spacings_lambda.push_back(list[i].get<double>());
        }
    }

    if (root.has("optimizer"))
    {
        FieldReader f(root.raw("optimizer"), "optimizer");
        if (f.has("starts"))
            cfg.optimizer.starts = f.unsigned_integer("starts", 1);
        if (f.has("gamma"))
        {
            cfg.optimizer.gamma = f.number("gamma");
            if (!(cfg.optimizer.gamma > 0.0))
                FieldReader::fail("optimizer.gamma", "must be positive");
        }
        if (f.has("max_iterations"))
            cfg.optimizer.max_iterations = f.unsigned_integer("max_iterations", 1);
        if (f.has("seed"))
            cfg.optimizer.seed = f.unsigned_integer("seed", 0);
        f.finish();
    }

    cfg.include_baseline = root.boolean("include_los_baseline", true);
    root.finish();

    try
    {
        validate(cfg);
    }
    catch (const std::invalid_argument &e)
    {
        throw ConfigError(e.what());
    }
    return cfg;
}

std::string config_checksum(const ConfigDocument &doc)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : doc.dump())
    {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace risnf
