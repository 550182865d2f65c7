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

#ifndef shadowsim_rng_H
#define shadowsim_rng_H

#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>

// Deterministic pseudo-random number generation for the Monte Carlo engine.
//
// Generator: PCG64 (pcg_setseq_128_xsl_rr_64) - a 128-bit linear congruential
// generator with stream selection, producing 64-bit outputs through the
// XSL-RR output function.  The implementation is output-compatible with the
// PCG-C reference implementation of this variant and with NumPy's PCG64 bit
// generator: the LCG state is advanced first and the output is computed from
// the advanced state.  This gives bit-reproducible sequences across platforms
// for any (seed, substream index) pair, which the experiment layer relies on
// for thread-count-invariant results.
//
// Substreams: a (64-bit seed, 64-bit index) pair is expanded into the
// generator's 128-bit initial state and 128-bit stream selector through the
// SplitMix64 finalizer, mixing seed and index words with distinct offsets so
// that distinct indices yield statistically independent streams.

namespace shadowsim
{

// SplitMix64 finalizer: the avalanche stage of the SplitMix64 generator.
inline constexpr std::uint64_t splitmix64_mix(std::uint64_t z) noexcept
{
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

// k-th element of the SplitMix64 sequence seeded with x (golden-ratio stride).
inline constexpr std::uint64_t splitmix64_at(std::uint64_t x, std::uint64_t k) noexcept
{
    return splitmix64_mix(x + k * 0x9E3779B97F4A7C15ull);
}

// Derives an independent 64-bit seed for sweep cell `cell_index` from a master
// seed, so each cell of a parameter sweep runs a reproducible, documented
// sub-experiment. (Offset by 1 so derive_seed(s, 0) != splitmix64_at(s, 0),
// which substream derivation below never evaluates.)
inline constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t cell_index) noexcept
{
    return splitmix64_at(master, cell_index + 1);
}

class RandomStream
{
  public:
    using u64 = std::uint64_t;
    using u128 = unsigned __int128;

    // Substream constructor: expands (seed, index) into the 128-bit PCG64
    // initial state and stream selector.  Identical (seed, index) pairs give
    // bit-identical output sequences on every platform.
    RandomStream(u64 seed, u64 index) noexcept : seed_v(seed), index_v(index)
    {
        const u128 initstate = (static_cast<u128>(splitmix64_at(seed, 1) ^ splitmix64_at(index, 3)) << 64) |
                               (splitmix64_at(seed, 2) ^ splitmix64_at(index, 4));
        const u128 initseq = (static_cast<u128>(splitmix64_at(seed, 3) ^ splitmix64_at(index, 1)) << 64) |
                             (splitmix64_at(seed, 4) ^ splitmix64_at(index, 2));
        seed_state(initstate, initseq);
    }

    // Raw-state constructor, mainly for vector tests against reference
    // implementations of the underlying generator.
    static RandomStream from_state(u128 initstate, u128 initseq) noexcept
    {
        RandomStream s;
        s.seed_state(initstate, initseq);
        return s;
    }

    // Next 64-bit output.  Note the order: advance the LCG, then apply the
    // XSL-RR output function to the *new* state (the convention of the
    // 128-bit PCG variant; the 64-bit variants output from the old state).
    u64 next_u64() noexcept
    {
        step();
        const u64 xsl = static_cast<u64>(state >> 64) ^ static_cast<u64>(state);
        const int rot = static_cast<int>(state >> 122);
        return std::rotr(xsl, rot);
    }

    // Uniform double in [0, 1) with 53 random bits (top bits of next_u64).
    double next_uniform() noexcept
    {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Standard normal variate via the Box-Muller transform (trigonometric
    // form).  Consumes exactly two uniforms per call and caches nothing, so
    // the stream consumption budget is deterministic.  ln(1-u) is used
    // instead of ln(u) because next_uniform() can return exactly 0 but
    // never exactly 1.
    double next_normal() noexcept
    {
        const double u1 = next_uniform();
        const double u2 = next_uniform();
        const double r = std::sqrt(-2.0 * std::log1p(-u1));
        return r * std::cos(2.0 * std::numbers::pi * u2);
    }

    u64 seed() const noexcept { return seed_v; }
    u64 index() const noexcept { return index_v; }

  private:
    RandomStream() = default;

    // PCG64 default multiplier (128-bit).
    static constexpr u128 mult()
    {
        return (static_cast<u128>(0x2360ed051fc65da4ull) << 64) | 0x4385df649fccf645ull;
    }

    void step() noexcept { state = state * mult() + inc; }

    // PCG seeding protocol: force the stream selector odd, run one step from
    // zero state, add the initial state, and step again.
    void seed_state(u128 initstate, u128 initseq) noexcept
    {
        inc = (initseq << 1) | 1u;
        state = 0;
        step();
        state += initstate;
        step();
    }

    u128 state = 0;
    u128 inc = 0;
    u64 seed_v = 0;
    u64 index_v = 0;
};

// Named substream factory; realization q of an experiment with master seed s
// draws from substream(s, q).
inline RandomStream substream(std::uint64_t seed, std::uint64_t index) noexcept
{
    return RandomStream(seed, index);
}

} // namespace shadowsim

#endif
