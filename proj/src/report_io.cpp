// SPDX-License-Identifier: Apache-2.0
//
// shadowsim - Monte Carlo simulation of multiplicative shadow-fading channel models
// Copyright (C) 2026 shadowsim contributors
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

#include <shadowsim/report_io.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <system_error>

#include <shadowsim/version.hpp>

namespace shadowsim
{

std::string format_fixed(double value)
{
    char buffer[64];
    const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value, std::chars_format::fixed, 6);
    if (result.ec != std::errc())
        throw std::invalid_argument("cannot format value with fixed precision");
    return std::string(buffer, result.ptr);
}

std::string sanitize_token(std::string_view text)
{
    std::string out;
    out.reserve(text.size());
    for (char c : text)
    {
        if (c == ':' || c == ',')
            out.push_back('-');
        else if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '.' ||
                 c == '_' || c == '-')
            out.push_back(c);
        else
            out.push_back('_');
    }
    return out;
}

void write_file(const std::filesystem::path &path, const std::string &content)
{
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file)
        throw IoError("cannot open '" + path.string() + "' for writing");
    file.write(content.data(), static_cast<std::streamsize>(content.size()));
    file.flush();
    if (!file)
        throw IoError("write to '" + path.string() + "' failed");
}

namespace
{

std::string csv_field(const std::string &text)
{
    if (text.find_first_of(",\"\r\n") == std::string::npos)
        return text;
    std::string quoted = "\"";
    for (char c : text)
    {
        if (c == '"')
            quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

} // namespace

std::string to_csv(const SweepReport &report)
{
    std::string out = "model,dist,param_name,param_value,std_db,ks,n,seed\n";
    for (const SweepRow &row : report.rows)
    {
        out += to_string(row.model);
        out += ',';
        out += csv_field(row.dist);
        out += ',';
        out += csv_field(row.param_name);
        out += ',';
        out += format_fixed(row.param_value);
        out += ',';
        out += format_fixed(row.std_db);
        out += ',';
        out += format_fixed(row.ks);
        out += ',';
        out += std::to_string(row.n_samples);
        out += ',';
        out += std::to_string(row.seed);
        out += '\n';
    }
    return out;
}

std::string cdf_curve_csv(const CdfExport &curve, bool fitted)
{
    std::string out = "db,cdf\n";
    for (const CdfPoint &point : curve.points)
    {
        out += format_fixed(point.db);
        out += ',';
        out += format_fixed(fitted ? point.fitted : point.empirical);
        out += '\n';
    }
    return out;
}

ordered_json to_json(const ScenarioConfig &config)
{
    ordered_json j;
    j["model"] = to_string(config.model);
    j["n"] = config.n;
    j["m"] = config.m;
    j["k"] = config.k;
    j["dist_a"] = config.dist_a.label();
    j["dist_b"] = config.dist_b.label();
    j["dist_s"] = config.dist_s.label();
    j["q"] = config.q;
    j["seed"] = config.seed;
    j["pl"] = config.pl;
    j["keyhole_index"] = config.keyhole_index;
    j["cluster_blocks"] = config.cluster_blocks;
    j["normalize"] = config.normalize;
    j["threads"] = config.threads;
    return j;
}

ScenarioConfig config_from_json(const ordered_json &j)
{
    ScenarioConfig config;
    config.model = model_from_string(j.at("model").get<std::string>());
    config.n = j.at("n").get<std::size_t>();
    config.m = j.at("m").get<std::size_t>();
    config.k = j.at("k").get<std::size_t>();
    config.dist_a = DistSpec::parse(j.at("dist_a").get<std::string>());
    config.dist_b = DistSpec::parse(j.at("dist_b").get<std::string>());
    config.dist_s = DistSpec::parse(j.at("dist_s").get<std::string>());
    config.q = j.at("q").get<std::uint64_t>();
    config.seed = j.at("seed").get<std::uint64_t>();
    config.pl = j.at("pl").get<double>();
    config.keyhole_index = j.at("keyhole_index").get<std::size_t>();
    config.cluster_blocks = j.at("cluster_blocks").get<std::vector<std::size_t>>();
    config.normalize = j.at("normalize").get<bool>();
    config.threads = j.at("threads").get<unsigned>();
    return config;
}

ordered_json to_json(const SweepReport &report)
{
    ordered_json j;
    j["name"] = report.name;
    j["master_seed"] = report.master_seed;
    j["base"] = to_json(report.base);
    ordered_json rows = ordered_json::array();
    for (const SweepRow &row : report.rows)
    {
        ordered_json r;
        r["model"] = to_string(row.model);
        r["dist"] = row.dist;
        r["param_name"] = row.param_name;
        r["param_value"] = row.param_value;
        r["std_db"] = row.std_db;
        r["ks"] = row.ks;
        r["n"] = row.n_samples;
        r["seed"] = row.seed;
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return j;
}

SweepReport sweep_report_from_json(const ordered_json &j)
{
    SweepReport report;
    report.name = j.at("name").get<std::string>();
    report.master_seed = j.at("master_seed").get<std::uint64_t>();
    report.base = config_from_json(j.at("base"));
    for (const ordered_json &r : j.at("rows"))
    {
        SweepRow row;
        row.model = model_from_string(r.at("model").get<std::string>());
        row.dist = r.at("dist").get<std::string>();
        row.param_name = r.at("param_name").get<std::string>();
        row.param_value = r.at("param_value").get<double>();
        row.std_db = r.at("std_db").get<double>();
        row.ks = r.at("ks").get<double>();
        row.n_samples = r.at("n").get<std::uint64_t>();
        row.seed = r.at("seed").get<std::uint64_t>();
        report.rows.push_back(std::move(row));
    }
    return report;
}

ordered_json to_json(const CdfExport &curve)
{
    ordered_json j;
    j["config"] = to_json(curve.config);
    j["mean_db"] = curve.fit.mean_db;
    j["std_db"] = curve.fit.std_db;
    j["ks"] = curve.ks;
    ordered_json points = ordered_json::array();
    for (const CdfPoint &point : curve.points)
        points.push_back(ordered_json::array({point.db, point.empirical, point.fitted}));
    j["points"] = std::move(points);
    return j;
}

RunManifest make_manifest(std::string command, std::uint64_t master_seed, ordered_json config)
{
    RunManifest manifest;
    manifest.tool = project_name;
    manifest.version = project_version;
    manifest.command = std::move(command);
    manifest.master_seed = master_seed;
    if (const char *epoch = std::getenv("SOURCE_DATE_EPOCH"))
        manifest.timestamp = epoch;
    manifest.config = std::move(config);
    return manifest;
}

ordered_json to_json(const RunManifest &manifest)
{
    ordered_json j;
    j["tool"] = manifest.tool;
    j["version"] = manifest.version;
    j["command"] = manifest.command;
    j["master_seed"] = manifest.master_seed;
    j["timestamp"] = manifest.timestamp;
    j["config"] = manifest.config;
    j["outputs"] = manifest.outputs;
    return j;
}

RunManifest manifest_from_json(const ordered_json &j)
{
    RunManifest manifest;
    manifest.tool = j.at("tool").get<std::string>();
    manifest.version = j.at("version").get<std::string>();
    manifest.command = j.at("command").get<std::string>();
    manifest.master_seed = j.at("master_seed").get<std::uint64_t>();
    manifest.timestamp = j.at("timestamp").get<std::string>();
    manifest.config = j.at("config");
    manifest.outputs = j.at("outputs").get<std::vector<std::string>>();
    return manifest;
}

std::string to_json_text(const ordered_json &j)
{
    return j.dump(2) + "\n";
}

} // namespace shadowsim
