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

#ifndef shadowsim_monte_carlo_H
#define shadowsim_monte_carlo_H

#include <cstdint>
#include <string_view>
#include <vector>

#include <shadowsim/channel.hpp>
#include <shadowsim/distributions.hpp>
#include <shadowsim/rng.hpp>

// Monte Carlo generation of local-mean-power sample sets.
//
// Determinism contract: realization q of an experiment with master seed s
// draws exclusively from substream(s, q), and results are written into slot q
// of the output, so the sample set is a pure function of (config, seed) -
// independent of thread count and scheduling.  Within one realization the
// consumption order is canonical and documented:
//
//     b entries, then S_1 ... S_K (column-major within each layer, cluster
//     blocks in block order), then a entries; every complex entry consumes
//     its amplitude draw(s) first and one phase draw second.
//
// Model variants:
//   sumprod  - fresh a, b, and K coupling layers per realization
//   prod     - cascade collapses to K scalars: P = sum|a_n b_n|^2 * prod|s_k|^2
//   sum      - intermediate ray vector c drawn once per experiment (from the
//              reserved substream below) and shared by all realizations; only
//              a is redrawn
//   los      - every layer carries a direct ray of gain pl^(1/K) decoupled
//              from an (N-1)-ray non-LOS block
//   keyhole  - one layer is a single-row bottleneck (composite rank <= 1)
//   cluster  - block-diagonal layers: non-interacting ray clusters

namespace shadowsim
{

enum class ModelKind
{
    sumprod,
    prod,
    sum,
    los,
    keyhole,
    cluster
};

const char *to_string(ModelKind model) noexcept;
ModelKind model_from_string(std::string_view name); // throws std::invalid_argument

// Reserved substream index for the sum model's shared c draw; realization
// indices are validated to stay below 2^32 (with redraw escalation occupying
// the range above), so the reserved index can never collide.
inline constexpr std::uint64_t sum_model_stream_index = 1ull << 63;

struct ScenarioConfig
{
    ModelKind model = ModelKind::sumprod;
    std::size_t n = 10;                      // receive rays
    std::size_t m = 10;                      // transmit rays
    std::size_t k = 1;                       // coupling layers
    DistSpec dist_a;                         // receive amplitudes
    DistSpec dist_b;                         // transmit amplitudes
    DistSpec dist_s;                         // coupling-entry amplitudes
    std::size_t q = 100000;                  // realization count
    std::uint64_t seed = 1;                  // master seed
    double pl = 0.1;                         // los: composite direct-path gain
    std::size_t keyhole_index = 1;           // keyhole: which layer is the bottleneck (1-based)
    std::vector<std::size_t> cluster_blocks; // cluster: ray count per block
    bool normalize = false;                  // divide layer columns by sqrt(rows)
    unsigned threads = 0;                    // worker threads; 0 = hardware concurrency

    // Sets all three component distributions at once.
    void set_dists(const DistSpec &d)
    {
        dist_a = d;
        dist_b = d;
        dist_s = d;
    }

    // Throws std::invalid_argument with the offending parameter named.
    void validate() const;

    bool operator==(const ScenarioConfig &other) const = default;
};

struct PowerSampleSet
{
    std::vector<double> samples_db; // 10*log10(P_q), slot q from substream(seed, q)
    ScenarioConfig config;
    bool centered = false;
    std::uint64_t rejected_draws = 0; // exactly-zero powers redrawn (expected 0)
};

// Draws one realization from the given stream in the canonical order above.
// For the sum model the shared c is re-derived from the reserved substream on
// every call (bit-identical across calls), stored in the b slot, and the
// layer list is empty - the power path is then identical to the ray sum.
ChannelRealization sample_realization(const ScenarioConfig &config, RandomStream &stream);

// Model-aware power of one realization.
double realization_power(const ScenarioConfig &config, const ChannelRealization &r);

// Q realizations in dB; bit-identical for fixed (config, seed) regardless of
// thread count.
PowerSampleSet run_experiment(const ScenarioConfig &config);

} // namespace shadowsim

#endif
