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

// Command line front end.  Exit codes: 0 success, 2 usage error, 3 invalid
// configuration, 4 I/O failure.  All output (stdout and files) is a pure
// function of the resolved options, so identical invocations are
// byte-identical regardless of thread count.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <shadowsim/experiments.hpp>
#include <shadowsim/kernels.hpp>
#include <shadowsim/report_io.hpp>
#include <shadowsim/version.hpp>

namespace fs = std::filesystem;
using namespace shadowsim;

namespace
{

struct CommonOptions
{
    std::uint64_t seed = 1;
    std::uint64_t q = 100000;
    unsigned threads = 0;
    std::string out = "csv";
    std::string out_dir = ".";
    std::string kernel = "auto";
};

void add_common_options(CLI::App *cmd, CommonOptions &common)
{
    cmd->add_option("--seed", common.seed, "Master seed")->capture_default_str();
    cmd->add_option("--q", common.q, "Realizations per cell")->capture_default_str();
    cmd->add_option("--threads", common.threads, "Worker threads, 0 = hardware concurrency")
        ->capture_default_str();
    cmd->add_option("--out", common.out, "Report format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--out-dir", common.out_dir, "Output directory")
        ->envname("SHADOWSIM_OUT_DIR")
        ->capture_default_str();
    cmd->add_option("--kernel", common.kernel, "Matrix kernel variant")
        ->check(CLI::IsMember({"auto", "scalar", "avx2"}))
        ->capture_default_str();
}

void apply_kernel_choice(const std::string &kernel)
{
    if (kernel == "scalar")
        kernels::select(kernels::Select::scalar);
    else if (kernel == "avx2")
        kernels::select(kernels::Select::avx2);
    else
        kernels::select(kernels::Select::automatic);
}

fs::path prepare_out_dir(const CommonOptions &common)
{
    const fs::path dir(common.out_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec)
        throw IoError("cannot create output directory '" + dir.string() + "': " + ec.message());
    return dir;
}

// The identifying distribution of a cell: all three components agree for
// the standard grids, and mixed configurations are identified by the
// interaction distribution.
std::string cell_dist_label(const ScenarioConfig &config)
{
    return config.dist_s.label();
}

std::string curve_base_name(const std::string &prefix, const CdfExport &curve)
{
    return prefix + "_" + to_string(curve.config.model) + "_" + sanitize_token(cell_dist_label(curve.config)) +
           "_k" + std::to_string(curve.config.k);
}

void note_output(std::vector<std::string> &outputs, const fs::path &path)
{
    outputs.push_back(path.generic_string());
}

void write_manifest(const fs::path &dir, const std::string &base_name, const std::string &command,
                    std::uint64_t master_seed, ordered_json config, std::vector<std::string> outputs)
{
    RunManifest manifest = make_manifest(command, master_seed, std::move(config));
    manifest.outputs = std::move(outputs);
    const fs::path path = dir / (base_name + "_manifest.json");
    write_file(path, to_json_text(to_json(manifest)));
    std::cout << "wrote " << path.generic_string() << "\n";
}

// Writes the data file(s) for a sweep report plus its manifest.
void emit_sweep_report(const SweepReport &report, const CommonOptions &common, const std::string &command,
                       ordered_json manifest_config)
{
    const fs::path dir = prepare_out_dir(common);
    std::vector<std::string> outputs;

    const fs::path data = dir / (report.name + (common.out == "csv" ? ".csv" : ".json"));
    write_file(data, common.out == "csv" ? to_csv(report) : to_json_text(to_json(report)));
    note_output(outputs, data);
    std::cout << "rows " << report.rows.size() << "\n";
    std::cout << "wrote " << data.generic_string() << "\n";

    write_manifest(dir, report.name, command, report.master_seed, std::move(manifest_config), std::move(outputs));
}

std::vector<std::string> emit_curve_files(const fs::path &dir, const std::string &prefix, const CdfExport &curve)
{
    std::vector<std::string> outputs;
    const std::string base = curve_base_name(prefix, curve);
    const fs::path empirical = dir / (base + "_empirical.csv");
    const fs::path fitted = dir / (base + "_fitted.csv");
    write_file(empirical, cdf_curve_csv(curve, false));
    write_file(fitted, cdf_curve_csv(curve, true));
    note_output(outputs, empirical);
    note_output(outputs, fitted);
    std::cout << "wrote " << empirical.generic_string() << "\n";
    std::cout << "wrote " << fitted.generic_string() << "\n";
    return outputs;
}

// --- run ---------------------------------------------------------------

struct RunOptions
{
    std::string model = "sumprod";
    std::size_t n = 10;
    std::size_t m = 0; // 0 = same as n
    std::size_t k = 1;
    std::string dist;
    std::string dist_a;
    std::string dist_b;
    std::string dist_s;
    double pl = 0.1;
    std::size_t keyhole_index = 1;
    std::vector<std::size_t> cluster_blocks;
    bool normalize = false;
    bool export_cdf = false;
    std::string name = "run";
};

ScenarioConfig build_config(const RunOptions &options, const CommonOptions &common)
{
    ScenarioConfig config;
    config.model = model_from_string(options.model);
    config.n = options.n;
    config.m = options.m == 0 ? options.n : options.m;
    config.k = options.k;
    if (!options.dist.empty())
        config.set_dists(DistSpec::parse(options.dist));
    if (!options.dist_a.empty())
        config.dist_a = DistSpec::parse(options.dist_a);
    if (!options.dist_b.empty())
        config.dist_b = DistSpec::parse(options.dist_b);
    if (!options.dist_s.empty())
        config.dist_s = DistSpec::parse(options.dist_s);
    config.q = common.q;
    config.seed = common.seed;
    config.threads = common.threads;
    config.pl = options.pl;
    config.keyhole_index = options.keyhole_index;
    config.cluster_blocks = options.cluster_blocks;
    config.normalize = options.normalize;
    config.validate();
    return config;
}

void handle_run(const RunOptions &options, const CommonOptions &common)
{
    apply_kernel_choice(common.kernel);
    const ScenarioConfig config = build_config(options, common);
    const fs::path dir = prepare_out_dir(common);

    SweepReport report;
    report.name = options.name;
    report.master_seed = config.seed;
    report.base = config;

    std::vector<std::string> outputs;
    if (options.export_cdf)
    {
        const CdfExport curve = cdf_export(config);
        SweepRow row;
        row.model = config.model;
        row.dist = cell_dist_label(config);
        row.param_name = "k";
        row.param_value = static_cast<double>(config.k);
        row.std_db = curve.fit.std_db;
        row.ks = curve.ks;
        row.n_samples = config.q;
        row.seed = config.seed;
        report.rows.push_back(row);
        outputs = emit_curve_files(dir, options.name, curve);
    }
    else
    {
        report.rows.push_back(run_cell(config, cell_dist_label(config), "k", static_cast<double>(config.k)));
    }

    const SweepRow &row = report.rows.front();
    std::cout << to_string(row.model) << " " << row.dist << " k=" << config.k << " n=" << config.n
              << " std_db=" << format_fixed(row.std_db) << " ks=" << format_fixed(row.ks) << "\n";

    const fs::path data = dir / (report.name + (common.out == "csv" ? ".csv" : ".json"));
    write_file(data, common.out == "csv" ? to_csv(report) : to_json_text(to_json(report)));
    outputs.insert(outputs.begin(), data.generic_string());
    std::cout << "wrote " << data.generic_string() << "\n";

    write_manifest(dir, report.name, "run", config.seed, to_json(config), std::move(outputs));
}

// --- sweep -------------------------------------------------------------

struct SweepOptions
{
    std::string vary;
    RunOptions base;
    std::vector<std::size_t> ks = {1, 5, 10, 20, 40};
    std::vector<std::size_t> ns = {5, 10, 20, 40, 100};
    std::vector<std::string> models = {"sumprod", "prod"};
    std::vector<std::string> dists = {"beta:1,1", "r:10", "l:1,1"};
    std::vector<std::string> grid;
    std::string name = "sweep";
};

void handle_sweep(const SweepOptions &options, const CommonOptions &common)
{
    apply_kernel_choice(common.kernel);
    ScenarioConfig base = build_config(options.base, common);

    std::vector<ModelKind> models;
    for (const std::string &text : options.models)
        models.push_back(model_from_string(text));
    std::vector<DistSpec> dists;
    for (const std::string &text : options.dists)
        dists.push_back(DistSpec::parse(text));

    SweepReport report;
    ordered_json manifest_config;
    manifest_config["base"] = to_json(base);
    manifest_config["vary"] = options.vary;
    if (options.vary == "k")
    {
        report = sweep_layers(base, options.ks, models, dists);
        manifest_config["ks"] = options.ks;
        manifest_config["models"] = options.models;
        manifest_config["dists"] = options.dists;
    }
    else if (options.vary == "n")
    {
        report = sweep_rays(base, options.ns, models, dists);
        manifest_config["ns"] = options.ns;
        manifest_config["models"] = options.models;
        manifest_config["dists"] = options.dists;
    }
    else
    {
        std::vector<DistSpec> grid;
        const std::vector<std::string> &labels = options.grid;
        if (labels.empty())
        {
            for (const DistSpec &spec : fig9_grid())
                grid.push_back(spec);
        }
        else
        {
            for (const std::string &text : labels)
                grid.push_back(DistSpec::parse(text));
        }
        report = sweep_distributions(base, grid);
        ordered_json grid_json = ordered_json::array();
        for (const DistSpec &spec : grid)
            grid_json.push_back(spec.label());
        manifest_config["grid"] = std::move(grid_json);
    }
    report.name = options.name;

    emit_sweep_report(report, common, "sweep --vary " + options.vary, std::move(manifest_config));
}

// --- reproduce ---------------------------------------------------------

void handle_reproduce(const std::string &target, const CommonOptions &common)
{
    apply_kernel_choice(common.kernel);
    ReproduceOptions options;
    options.seed = common.seed;
    options.q = common.q;
    options.threads = common.threads;

    ordered_json manifest_config;
    manifest_config["target"] = target;
    manifest_config["seed"] = options.seed;
    manifest_config["q"] = options.q;
    const std::string command = "reproduce " + target;

    if (target == "table2" || target == "fig6" || target == "fig8" || target == "fig9")
    {
        SweepReport report;
        if (target == "table2")
            report = reproduce_table2(options);
        else if (target == "fig6")
            report = reproduce_fig6(options);
        else if (target == "fig8")
            report = reproduce_fig8(options);
        else
            report = reproduce_fig9(options);
        emit_sweep_report(report, common, command, std::move(manifest_config));
        return;
    }

    if (target == "table3")
    {
        const Table3Report result = reproduce_table3(options);
        std::cout << "best_k " << result.best_k << " calibration_error " << format_fixed(result.calibration_error)
                  << "\n";
        ordered_json calibration = ordered_json::array();
        for (const auto &[k, error] : result.calibration)
            calibration.push_back(ordered_json::array({k, error}));
        manifest_config["best_k"] = result.best_k;
        manifest_config["calibration"] = std::move(calibration);
        emit_sweep_report(result.report, common, command, std::move(manifest_config));
        return;
    }

    const fs::path dir = prepare_out_dir(common);
    std::vector<std::string> outputs;
    if (target == "fig4")
    {
        const CdfExport curve = reproduce_fig4(options);
        std::cout << "std_db " << format_fixed(curve.fit.std_db) << " ks " << format_fixed(curve.ks) << "\n";
        if (common.out == "json")
        {
            const fs::path data = dir / "fig4.json";
            write_file(data, to_json_text(to_json(curve)));
            note_output(outputs, data);
            std::cout << "wrote " << data.generic_string() << "\n";
        }
        else
        {
            outputs = emit_curve_files(dir, "fig4", curve);
        }
        write_manifest(dir, "fig4", command, options.seed, std::move(manifest_config), std::move(outputs));
        return;
    }

    // fig7: six curve pairs (both models x default distributions at K = 5)
    const std::vector<CdfExport> curves = reproduce_fig7(options);
    if (common.out == "json")
    {
        ordered_json all = ordered_json::array();
        for (const CdfExport &curve : curves)
            all.push_back(to_json(curve));
        const fs::path data = dir / "fig7.json";
        write_file(data, to_json_text(all));
        note_output(outputs, data);
        std::cout << "wrote " << data.generic_string() << "\n";
    }
    else
    {
        for (const CdfExport &curve : curves)
        {
            std::vector<std::string> paths = emit_curve_files(dir, "fig7", curve);
            for (std::string &path : paths)
                outputs.push_back(std::move(path));
        }
    }
    write_manifest(dir, "fig7", command, options.seed, std::move(manifest_config), std::move(outputs));
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Monte Carlo simulation of multiplicative shadow-fading channel models"};
    app.set_version_flag("--version", project_version);
    app.set_config("--config", "", "Read options from an INI file (flags win over file keys)");
    app.allow_config_extras(false);
    app.require_subcommand(1);

    CommonOptions common;

    RunOptions run_options;
    CLI::App *run_cmd = app.add_subcommand("run", "Run one Monte Carlo cell");
    add_common_options(run_cmd, common);
    run_cmd->add_option("--model", run_options.model, "sumprod | prod | sum | los | keyhole | cluster")
        ->capture_default_str();
    run_cmd->add_option("--n", run_options.n, "Receive rays")->capture_default_str();
    run_cmd->add_option("--m", run_options.m, "Transmit rays (default: same as --n)");
    run_cmd->add_option("--k", run_options.k, "Coupling layers")->capture_default_str();
    run_cmd->add_option("--dist", run_options.dist, "Amplitude distribution for all components, e.g. beta:1,1");
    run_cmd->add_option("--dist-a", run_options.dist_a, "Receive amplitude distribution");
    run_cmd->add_option("--dist-b", run_options.dist_b, "Transmit amplitude distribution");
    run_cmd->add_option("--dist-s", run_options.dist_s, "Coupling-entry amplitude distribution");
    run_cmd->add_option("--pl", run_options.pl, "los: composite direct-path gain in (0,1]")->capture_default_str();
    run_cmd->add_option("--keyhole-index", run_options.keyhole_index, "keyhole: bottleneck layer (1-based)")
        ->capture_default_str();
    run_cmd->add_option("--cluster-blocks", run_options.cluster_blocks, "cluster: rays per block (must sum to n)");
    run_cmd->add_flag("--normalize", run_options.normalize, "Divide layer entries by sqrt(rows)");
    run_cmd->add_flag("--export-cdf", run_options.export_cdf, "Also write empirical/fitted CDF curve files");
    run_cmd->add_option("--name", run_options.name, "Output base name")->capture_default_str();
    run_cmd->callback([&]() { handle_run(run_options, common); });

    SweepOptions sweep_options;
    CLI::App *sweep_cmd = app.add_subcommand("sweep", "Sweep layers, rays, or distributions");
    add_common_options(sweep_cmd, common);
    sweep_cmd->add_option("--vary", sweep_options.vary, "k | n | dist")
        ->required()
        ->check(CLI::IsMember({"k", "n", "dist"}));
    sweep_cmd->add_option("--model", sweep_options.base.model, "Base model")->capture_default_str();
    sweep_cmd->add_option("--n", sweep_options.base.n, "Base receive rays")->capture_default_str();
    sweep_cmd->add_option("--m", sweep_options.base.m, "Base transmit rays (default: same as --n)");
    sweep_cmd->add_option("--k", sweep_options.base.k, "Base layer count")->capture_default_str();
    sweep_cmd->add_option("--dist", sweep_options.base.dist, "Base distribution for all components");
    sweep_cmd->add_option("--dist-a", sweep_options.base.dist_a, "Base receive amplitude distribution");
    sweep_cmd->add_option("--dist-b", sweep_options.base.dist_b, "Base transmit amplitude distribution");
    sweep_cmd->add_option("--dist-s", sweep_options.base.dist_s, "Base coupling-entry amplitude distribution");
    sweep_cmd->add_option("--ks", sweep_options.ks, "Layer counts for --vary k")->capture_default_str();
    sweep_cmd->add_option("--ns", sweep_options.ns, "Ray counts for --vary n")->capture_default_str();
    sweep_cmd->add_option("--models", sweep_options.models, "Models for k/n sweeps")->capture_default_str();
    sweep_cmd->add_option("--dists", sweep_options.dists, "Distributions for k/n sweeps")->capture_default_str();
    sweep_cmd->add_option("--grid", sweep_options.grid, "Distribution grid for --vary dist (default: fig9 grid)");
    sweep_cmd->add_option("--name", sweep_options.name, "Output base name")->capture_default_str();
    sweep_cmd->callback([&]() { handle_sweep(sweep_options, common); });

    std::string target;
    CLI::App *reproduce_cmd = app.add_subcommand("reproduce", "Reproduce a named table or figure dataset");
    add_common_options(reproduce_cmd, common);
    reproduce_cmd->add_option("target", target, "table2 | table3 | fig4 | fig6 | fig7 | fig8 | fig9")
        ->required()
        ->check(CLI::IsMember({"table2", "table3", "fig4", "fig6", "fig7", "fig8", "fig9"}));
    reproduce_cmd->callback([&]() { handle_reproduce(target, common); });

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    catch (const IoError &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    catch (const std::filesystem::filesystem_error &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    catch (const std::invalid_argument &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    catch (const std::domain_error &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
