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

#include <doctest.h>

#include <cmath>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include <shadowsim/experiments.hpp>
#include <shadowsim/rng.hpp>

using namespace shadowsim;

namespace
{

ScenarioConfig quick_base(std::uint64_t q = 500)
{
    ScenarioConfig base;
    base.q = q;
    base.seed = 3;
    base.threads = 1;
    return base;
}

} // namespace

TEST_CASE("default grids")
{
    CHECK(default_layer_counts() == std::vector<std::size_t>{1, 5, 10, 20, 40});
    CHECK(default_ray_counts() == std::vector<std::size_t>{5, 10, 20, 40, 100});

    const std::vector<DistSpec> dists = default_distributions();
    REQUIRE(dists.size() == 3);
    CHECK(dists[0].label() == "beta:1,1");
    CHECK(dists[1].label() == "r:10");
    CHECK(dists[2].label() == "l:1,1");
}

TEST_CASE("fig9 grid covers the documented 10 specs in order, no duplicates")
{
    const std::vector<DistSpec> grid = fig9_grid();
    const std::vector<std::string> want = {"beta:0.5,0.5", "beta:1,1", "beta:2,2", "r:1",   "r:3",
                                           "r:10",         "r:30",     "l:1,0.5",  "l:1,1", "l:1,2"};
    REQUIRE(grid.size() == want.size());
    std::set<std::string> seen;
    for (std::size_t i = 0; i < grid.size(); ++i)
    {
        CHECK(grid[i].label() == want[i]);
        seen.insert(grid[i].label());
    }
    CHECK(seen.size() == grid.size());
}

TEST_CASE("sweep_layers emits model-major rows with sequentially derived seeds")
{
    const std::vector<std::size_t> ks = {1, 2};
    const std::vector<ModelKind> models = {ModelKind::sumprod, ModelKind::prod};
    const std::vector<DistSpec> dists = {DistSpec::beta(1.0, 1.0), DistSpec::r_inv(10.0)};

    const SweepReport report = sweep_layers(quick_base(), ks, models, dists);
    REQUIRE(report.rows.size() == 8);
    CHECK(report.master_seed == 3);

    std::size_t idx = 0;
    for (ModelKind model : models)
    {
        for (const DistSpec &dist : dists)
        {
            for (std::size_t k : ks)
            {
                const SweepRow &row = report.rows[idx];
                CHECK(row.model == model);
                CHECK(row.dist == dist.label());
                CHECK(row.param_name == "k");
                CHECK(row.param_value == static_cast<double>(k));
                CHECK(row.seed == derive_seed(3, idx));
                CHECK(row.n_samples == 500);
                CHECK(row.std_db > 0.0);
                CHECK(row.ks > 0.0);
                ++idx;
            }
        }
    }
}

TEST_CASE("sweep_rays varies n and records it")
{
    const SweepReport report =
        sweep_rays(quick_base(), {2, 5}, {ModelKind::sumprod}, {DistSpec::beta(1.0, 1.0)});
    REQUIRE(report.rows.size() == 2);
    CHECK(report.rows[0].param_name == "n");
    CHECK(report.rows[0].param_value == 2.0);
    CHECK(report.rows[1].param_value == 5.0);
    CHECK(report.rows[0].seed == derive_seed(3, 0));
    CHECK(report.rows[1].seed == derive_seed(3, 1));
}

TEST_CASE("sweep_distributions applies the grid to the coupling entries only")
{
    ScenarioConfig base = quick_base();
    base.k = 2;
    const std::vector<DistSpec> grid = {DistSpec::r_inv(1.0), DistSpec::l_inv(1.0, 2.0)};
    const SweepReport report = sweep_distributions(base, grid);

    REQUIRE(report.rows.size() == 2);
    CHECK(report.base.n == 5);
    CHECK(report.base.m == 5);
    CHECK(report.base.k == 2);
    CHECK(report.base.dist_a.label() == "beta:1,1");
    CHECK(report.base.dist_b.label() == "beta:1,1");
    CHECK(report.rows[0].dist == "r:1");
    CHECK(report.rows[1].dist == "l:1,2");
    CHECK(report.rows[0].param_name == "k");
    CHECK(report.rows[0].param_value == 2.0);
}

TEST_CASE("rows can be re-run bit-identically from their recorded seed")
{
    const SweepReport report =
        sweep_layers(quick_base(), {3}, {ModelKind::sumprod}, {DistSpec::l_inv(1.0, 1.0)});
    const SweepRow &row = report.rows[0];

    ScenarioConfig cell = report.base;
    cell.k = 3;
    cell.set_dists(DistSpec::l_inv(1.0, 1.0));
    cell.seed = row.seed;
    const SweepRow again = run_cell(cell, "l:1,1", "k", 3.0);
    CHECK(again.std_db == row.std_db);
    CHECK(again.ks == row.ks);
}

TEST_CASE("cdf_export produces a valid curve pair")
{
    ScenarioConfig config = quick_base(1500);
    config.k = 2;
    const CdfExport curve = cdf_export(config);

    // q below the thinning cutoff: one point per sample.
    REQUIRE(curve.points.size() == 1500);
    CHECK(std::abs(curve.fit.mean_db) < 1e-9); // fit of centered samples

    double max_gap = 0.0;
    for (std::size_t i = 0; i < curve.points.size(); ++i)
    {
        const CdfPoint &p = curve.points[i];
        if (i > 0)
        {
            CHECK(p.db >= curve.points[i - 1].db);
            CHECK(p.empirical >= curve.points[i - 1].empirical);
        }
        CHECK(p.empirical > 0.0);
        CHECK(p.empirical <= 1.0);
        CHECK(p.fitted > 0.0);
        CHECK(p.fitted < 1.0);
        max_gap = std::max(max_gap, std::abs(p.empirical - p.fitted));
    }
    CHECK(curve.points.back().empirical == 1.0);

    // The K-S statistic also considers the lower step edge (i-1)/n, so it can
    // exceed the per-point gap by at most one step height.
    CHECK(curve.ks >= max_gap - 1e-15);
    CHECK(curve.ks <= max_gap + 1.0 / 1500.0 + 1e-15);

    ScenarioConfig big = quick_base(3000);
    CHECK(cdf_export(big).points.size() == 2000); // thinning cap
}

TEST_CASE("bundled regression reference tables have the sweep's shape")
{
    const auto &t2 = table2_reference_std();
    const auto &t3 = table3_reference_std();
    REQUIRE(t2.size() == 6);
    REQUIRE(t3.size() == 6);
    for (const auto &row : t2)
        for (double v : row)
            CHECK(v > 0.0);
    // Spot checks, one per family block.
    CHECK(t2[0][0] == 2.7);  // cascade, uniform amplitudes, K = 1
    CHECK(t2[3][4] == 55.1); // product, uniform amplitudes, K = 40
    CHECK(t3[1][0] == 7.6);  // cascade, r:10, N = 5
    CHECK(t3[3][0] == 19.7); // product, uniform, N = 5

    // The product model is insensitive to ray count; the references reflect
    // that with nearly flat rows.
    for (std::size_t r = 3; r < 6; ++r)
    {
        double lo = 1e300, hi = 0.0;
        for (double v : t3[r])
        {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        CHECK(hi - lo < 1.0);
    }

    // The cascade rows, by contrast, fall sharply as rays are added (and
    // grow with the layer count in the K sweep).
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 1; c < 5; ++c)
        {
            CHECK(t3[r][c] < t3[r][c - 1]);
            CHECK(t2[r][c] > t2[r][c - 1]);
        }
}

TEST_CASE("reproduce_table2 emits the full 30-row grid")
{
    ReproduceOptions opts;
    opts.q = 200;
    opts.seed = 4;
    opts.threads = 1;
    const SweepReport report = reproduce_table2(opts);
    REQUIRE(report.rows.size() == 30);
    CHECK(report.name == "table2");
    CHECK(report.base.n == 10);
    CHECK(report.base.m == 10);

    // Same grid as fig6 apart from the report name.
    const SweepReport fig6 = reproduce_fig6(opts);
    CHECK(fig6.name == "fig6");
    REQUIRE(fig6.rows.size() == 30);
    for (std::size_t i = 0; i < 30; ++i)
    {
        CHECK(fig6.rows[i].std_db == report.rows[i].std_db);
        CHECK(fig6.rows[i].ks == report.rows[i].ks);
    }
}

TEST_CASE("reproduce_table3 calibrates the layer count")
{
    ReproduceOptions opts;
    opts.q = 300;
    opts.seed = 6;
    opts.threads = 1;
    const Table3Report result = reproduce_table3(opts);

    REQUIRE(result.calibration.size() == 5);
    std::set<std::size_t> candidates;
    for (const auto &[k, err] : result.calibration)
    {
        candidates.insert(k);
        CHECK(err >= 0.0);
        if (k == result.best_k)
            CHECK(err == result.calibration_error);
        else
            CHECK(err >= result.calibration_error);
    }
    CHECK(candidates == std::set<std::size_t>{1, 5, 10, 20, 40});

    REQUIRE(result.report.rows.size() == 30);
    CHECK(result.report.name == "table3");
    for (const SweepRow &row : result.report.rows)
        CHECK(row.param_name == "n");
}

TEST_CASE("reproduce_fig9 emits dist-major rows over the grid")
{
    ReproduceOptions opts;
    opts.q = 200;
    opts.seed = 8;
    opts.threads = 1;
    const SweepReport report = reproduce_fig9(opts);

    const std::vector<DistSpec> grid = fig9_grid();
    const std::vector<std::size_t> ks = default_layer_counts();
    REQUIRE(report.rows.size() == grid.size() * ks.size());
    CHECK(report.base.n == 5);
    CHECK(report.base.m == 5);

    std::size_t idx = 0;
    for (const DistSpec &dist : grid)
    {
        for (std::size_t k : ks)
        {
            CHECK(report.rows[idx].dist == dist.label());
            CHECK(report.rows[idx].param_value == static_cast<double>(k));
            ++idx;
        }
    }
}

TEST_CASE("reproduce_fig4 and fig7 export the documented cells")
{
    ReproduceOptions opts;
    opts.q = 400;
    opts.seed = 9;
    opts.threads = 1;

    const CdfExport fig4 = reproduce_fig4(opts);
    CHECK(fig4.config.k == 40);
    CHECK(fig4.config.n == 10);
    CHECK(fig4.config.dist_s.label() == "r:10");
    CHECK(fig4.config.dist_a.label() == "beta:1,1");
    REQUIRE(fig4.points.size() == 400);

    const std::vector<CdfExport> fig7 = reproduce_fig7(opts);
    REQUIRE(fig7.size() == 6);
    for (const CdfExport &curve : fig7)
        CHECK(curve.config.k == 5);
    CHECK(fig7[0].config.model == ModelKind::sumprod);
    CHECK(fig7[3].config.model == ModelKind::prod);
    CHECK(fig7[0].config.dist_s.label() == "beta:1,1");
    CHECK(fig7[1].config.dist_s.label() == "r:10");
    CHECK(fig7[2].config.dist_s.label() == "l:1,1");
}
