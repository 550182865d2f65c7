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

#include <shadowsim/monte_carlo.hpp>

#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>

#include <shadowsim/stats.hpp>

namespace shadowsim
{

const char *to_string(ModelKind model) noexcept
{
    switch (model)
    {
    case ModelKind::sumprod:
        return "sumprod";
    case ModelKind::prod:
        return "prod";
    case ModelKind::sum:
        return "sum";
    case ModelKind::los:
        return "los";
    case ModelKind::keyhole:
        return "keyhole";
    case ModelKind::cluster:
        return "cluster";
    }
    return "?";
}

ModelKind model_from_string(std::string_view name)
{
    if (name == "sumprod")
        return ModelKind::sumprod;
    if (name == "prod")
        return ModelKind::prod;
    if (name == "sum")
        return ModelKind::sum;
    if (name == "los")
        return ModelKind::los;
    if (name == "keyhole")
        return ModelKind::keyhole;
    if (name == "cluster")
        return ModelKind::cluster;
    throw std::invalid_argument("model '" + std::string(name) +
                                "': expected one of sumprod, prod, sum, los, keyhole, cluster");
}

void ScenarioConfig::validate() const
{
    if (n < 1)
        throw std::invalid_argument("n: ray count must be >= 1");
    if (m < 1)
        throw std::invalid_argument("m: ray count must be >= 1");
    if (k < 1)
        throw std::invalid_argument("k: layer count must be >= 1");
    if (q < 1)
        throw std::invalid_argument("q: realization count must be >= 1");
    if (q > (std::uint64_t(1) << 32))
        throw std::invalid_argument("q: realization count must be <= 2^32 (substream index budget)");
    if (model != ModelKind::sumprod && m != n)
        throw std::invalid_argument(std::string("m: model '") + to_string(model) + "' requires m == n");
    if (model == ModelKind::los)
    {
        if (n < 2)
            throw std::invalid_argument("n: los model needs n >= 2 (one direct ray plus a non-LOS block)");
        if (!(pl > 0.0) || !(pl <= 1.0)) // negated compare also rejects NaN
            throw std::invalid_argument("pl: direct-path gain must lie in (0, 1]");
    }
    if (model == ModelKind::keyhole)
    {
        if (k < 2)
            throw std::invalid_argument("k: keyhole model needs k >= 2 (bottleneck plus a re-expanding layer)");
        if (keyhole_index < 1 || keyhole_index > k - 1)
            throw std::invalid_argument("keyhole_index: must lie in [1, k-1], got " + std::to_string(keyhole_index));
    }
    if (model == ModelKind::cluster)
    {
        if (cluster_blocks.empty())
            throw std::invalid_argument("cluster_blocks: cluster model needs at least one block size");
        std::size_t total = 0;
        for (std::size_t block : cluster_blocks)
        {
            if (block < 1)
                throw std::invalid_argument("cluster_blocks: block sizes must be >= 1");
            total += block;
        }
        if (total != n)
            throw std::invalid_argument("cluster_blocks: block sizes sum to " + std::to_string(total) +
                                        ", expected n = " + std::to_string(n));
    }
}

namespace
{

// One ray vector in canonical consumption order: per entry, amplitude first,
// then phase.  The sampled amplitude is stored alongside the complex entry.
RayVector draw_ray_vector(std::size_t count, const DistSpec &dist, RandomStream &stream)
{
    RayVector v;
    v.entries.resize(count);
    v.amps.resize(count);
    for (std::size_t i = 0; i < count; ++i)
    {
        const double amp = dist.sample_amplitude(stream);
        const double phase = sample_phase(stream);
        v.entries[i] = std::polar(amp, phase);
        v.amps[i] = amp;
    }
    return v;
}

// Fills a rows x cols matrix in column-major order (the storage order, so a
// single linear pass over entries()).
CouplingMatrix draw_matrix(std::size_t rows, std::size_t cols, const DistSpec &dist, RandomStream &stream)
{
    CouplingMatrix s(rows, cols);
    for (cplx &entry : s.entries())
        entry = sample_complex(dist, stream);
    return s;
}

std::vector<CouplingMatrix> draw_layers(const ScenarioConfig &config, RandomStream &stream)
{
    std::vector<CouplingMatrix> layers;
    layers.reserve(config.k);
    switch (config.model)
    {
    case ModelKind::sumprod:
        // S_1 maps the M transmit rays onto N interior rays; later layers are
        // square N x N.
        for (std::size_t i = 0; i < config.k; ++i)
            layers.push_back(draw_matrix(config.n, i == 0 ? config.m : config.n, config.dist_s, stream));
        break;
    case ModelKind::prod:
        // The cascade collapses to K scalar factors.
        for (std::size_t i = 0; i < config.k; ++i)
            layers.push_back(draw_matrix(1, 1, config.dist_s, stream));
        break;
    case ModelKind::sum:
        // No coupling layers; the fixed intermediate vector c sits in the b
        // slot (drawn by the caller from the reserved substream).
        break;
    case ModelKind::los:
        for (std::size_t i = 0; i < config.k; ++i)
        {
            const CouplingMatrix nlos = draw_matrix(config.n - 1, config.n - 1, config.dist_s, stream);
            layers.push_back(build_los_layer(config.pl, config.k, nlos));
        }
        break;
    case ModelKind::keyhole:
    {
        // Layer keyhole_index is the 1 x N bottleneck; the next layer re-expands
        // from its single output ray, so the composite has rank <= 1.
        for (std::size_t i = 1; i <= config.k; ++i)
        {
            const std::size_t rows = (i == config.keyhole_index) ? 1 : config.n;
            const std::size_t cols = (i == config.keyhole_index + 1) ? 1 : config.n;
            layers.push_back(draw_matrix(rows, cols, config.dist_s, stream));
        }
        layers = build_keyhole_layers(std::move(layers), config.keyhole_index);
        break;
    }
    case ModelKind::cluster:
        for (std::size_t i = 0; i < config.k; ++i)
        {
            std::vector<CouplingMatrix> blocks;
            blocks.reserve(config.cluster_blocks.size());
            for (std::size_t block : config.cluster_blocks)
                blocks.push_back(draw_matrix(block, block, config.dist_s, stream));
            layers.push_back(build_cluster_layer(blocks));
        }
        break;
    }
    if (config.normalize)
        for (CouplingMatrix &layer : layers)
            layer = normalize_layer(layer, layer.rows());
    return layers;
}

} // namespace

ChannelRealization sample_realization(const ScenarioConfig &config, RandomStream &stream)
{
    ChannelRealization r;
    if (config.model == ModelKind::sum)
    {
        // Shared intermediate vector: re-derived from the reserved substream on
        // every call, so all realizations of one experiment see bit-identical c.
        RandomStream c_stream = substream(config.seed, sum_model_stream_index);
        r.b = draw_ray_vector(config.n, config.dist_b, c_stream);
    }
    else
    {
        r.b = draw_ray_vector(config.m, config.dist_b, stream);
    }
    r.layers = draw_layers(config, stream);
    r.a = draw_ray_vector(config.n, config.dist_a, stream);
    return r;
}

double realization_power(const ScenarioConfig &config, const ChannelRealization &r)
{
    switch (config.model)
    {
    case ModelKind::prod:
    {
        cvec scalars;
        scalars.reserve(r.layers.size());
        for (const CouplingMatrix &layer : r.layers)
            scalars.push_back(layer.at(0, 0));
        return product_model_power(r.a, r.b, scalars);
    }
    case ModelKind::sum:
        return sum_model_power(r.a.amps, r.b.entries);
    case ModelKind::sumprod:
    case ModelKind::los:
    case ModelKind::keyhole:
    case ModelKind::cluster:
        break;
    }
    return local_mean_power(r);
}

namespace
{

// Draws realization q (re-drawing on an exactly-zero power, which cannot
// occur under the supported continuous amplitude distributions but is
// guarded so the dB conversion can never see 0).  Escalated attempts move to
// substream index q + attempt * 2^32, disjoint from all base indices.
double realization_power_db(const ScenarioConfig &config, std::uint64_t q_index, std::uint64_t &rejected)
{
    for (std::uint64_t attempt = 0;; ++attempt)
    {
        if (attempt == 100)
            throw std::runtime_error("realization " + std::to_string(q_index) +
                                     ": local mean power is exactly zero after 100 re-draws; "
                                     "the amplitude distribution appears degenerate");
        RandomStream stream = substream(config.seed, q_index + (attempt << 32));
        const ChannelRealization r = sample_realization(config, stream);
        const double p = realization_power(config, r);
        if (p > 0.0)
            return to_db(p);
        ++rejected;
    }
}

} // namespace

PowerSampleSet run_experiment(const ScenarioConfig &config)
{
    config.validate();

    PowerSampleSet result;
    result.config = config;
    result.samples_db.resize(config.q);

    unsigned threads = config.threads;
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    if (static_cast<std::uint64_t>(threads) > config.q)
        threads = static_cast<unsigned>(config.q);

    if (threads <= 1)
    {
        std::uint64_t rejected = 0;
        for (std::uint64_t q_index = 0; q_index < config.q; ++q_index)
            result.samples_db[q_index] = realization_power_db(config, q_index, rejected);
        result.rejected_draws = rejected;
        return result;
    }

    // Contiguous chunks with indexed writes: partitioning affects only which
    // thread fills which slots, never the values, because realization q draws
    // exclusively from substream(seed, q).
    std::atomic<std::uint64_t> rejected_total{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t)
    {
        const std::uint64_t lo = config.q * t / threads;
        const std::uint64_t hi = config.q * (t + 1) / threads;
        pool.emplace_back([&, lo, hi]() {
            std::uint64_t rejected = 0;
            try
            {
                for (std::uint64_t q_index = lo; q_index < hi; ++q_index)
                    result.samples_db[q_index] = realization_power_db(config, q_index, rejected);
            }
            catch (...)
            {
                const std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error)
                    first_error = std::current_exception();
            }
            rejected_total.fetch_add(rejected, std::memory_order_relaxed);
        });
    }
    for (std::thread &worker : pool)
        worker.join();
    if (first_error)
        std::rethrow_exception(first_error);

    result.rejected_draws = rejected_total.load(std::memory_order_relaxed);
    return result;
}

} // namespace shadowsim
