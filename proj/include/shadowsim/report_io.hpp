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

#ifndef shadowsim_report_io_H
#define shadowsim_report_io_H

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include <shadowsim/experiments.hpp>

// Byte-stable serialization of reports: CSV for the data tables, JSON for
// structured output, and a RunManifest sidecar that records everything
// needed to re-run the experiment bit-identically.  Identical inputs always
// produce identical bytes (fixed number formatting, LF endings, stable JSON
// key order, no wall-clock values).

namespace shadowsim
{

using ordered_json = nlohmann::ordered_json;

// File-system failures; the CLI maps this to its I/O exit code.
struct IoError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

// value printed with exactly six fixed decimals (no locale involvement).
std::string format_fixed(double value);

// Filename-safe token: ':' and ',' become '-'; anything outside
// [A-Za-z0-9._-] becomes '_'.
std::string sanitize_token(std::string_view text);

// Writes content verbatim (binary mode).  Throws IoError on any failure.
void write_file(const std::filesystem::path &path, const std::string &content);

// --- CSV ---------------------------------------------------------------

// Header `model,dist,param_name,param_value,std_db,ks,n,seed`; one row per
// sweep cell; param_value/std_db/ks with six fixed decimals; RFC-4180
// quoting; LF line endings.
std::string to_csv(const SweepReport &report);

// One exported curve as two-column CSV (`db,cdf`), six fixed decimals.
// fitted = false emits the empirical CDF, true the fitted-normal CDF.
std::string cdf_curve_csv(const CdfExport &curve, bool fitted);

// --- JSON --------------------------------------------------------------

ordered_json to_json(const ScenarioConfig &config);
ScenarioConfig config_from_json(const ordered_json &j);

ordered_json to_json(const SweepReport &report);
SweepReport sweep_report_from_json(const ordered_json &j);

ordered_json to_json(const CdfExport &curve);

// --- manifest ------------------------------------------------------------

// Sidecar describing one emission.  `timestamp` is taken from the
// SOURCE_DATE_EPOCH environment variable when set and is empty otherwise,
// so repeated runs stay byte-identical.
struct RunManifest
{
    std::string tool;
    std::string version;
    std::string command; // resolved subcommand and arguments
    std::uint64_t master_seed = 0;
    std::string timestamp;
    ordered_json config; // resolved ScenarioConfig or sweep grid
    std::vector<std::string> outputs;

    bool operator==(const RunManifest &other) const = default;
};

// Fills tool/version/timestamp; command, seed, config, outputs from the
// caller.
RunManifest make_manifest(std::string command, std::uint64_t master_seed, ordered_json config);

ordered_json to_json(const RunManifest &manifest);
RunManifest manifest_from_json(const ordered_json &j);

// JSON serialized with 2-space indentation and a trailing newline.
std::string to_json_text(const ordered_json &j);

} // namespace shadowsim

#endif
