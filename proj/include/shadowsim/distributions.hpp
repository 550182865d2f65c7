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

#ifndef shadowsim_distributions_H
#define shadowsim_distributions_H

#include <complex>
#include <string>
#include <string_view>

#include <shadowsim/rng.hpp>

// Amplitude and phase variate generation for the channel components.
//
// Every channel entry is amplitude * exp(i * phase) with the phase uniform on
// [0, 2*pi) and the amplitude drawn from one of three families, all supported
// on the unit interval (interactions are passive - they cannot amplify):
//
//   beta:A,B    beta distribution with shapes A, B      (A = B = 1: uniform)
//   r:B         Y = 1/(1+X), X Rayleigh with scale B
//   l:mu,sigma  Y = 1/(1+X), X log-normal, ln X ~ Normal(mu, sigma^2)
//
// The textual forms above are the canonical parse/print format used by the
// CLI and report files.

namespace shadowsim
{

enum class DistKind
{
    beta,
    r_inv,
    l_inv
};

class DistSpec
{
  public:
    // Uniform amplitudes by default (beta with A = B = 1).
    DistSpec() = default;

    static DistSpec beta(double A, double B);
    static DistSpec r_inv(double B);
    static DistSpec l_inv(double mu, double sigma);

    // Parses the canonical textual forms `beta:A,B`, `r:B`, `l:mu,sigma`.
    // Throws std::invalid_argument naming the offending parameter.
    static DistSpec parse(std::string_view text);

    DistKind kind() const noexcept { return kind_v; }

    // First/second parameter (meaning depends on kind: beta A,B; r B,unused;
    // l mu,sigma).
    double param1() const noexcept { return p1; }
    double param2() const noexcept { return p2; }

    // Canonical textual form; DistSpec::parse(label()) round-trips.
    std::string label() const;

    // One amplitude draw in [0,1].
    double sample_amplitude(RandomStream &stream) const;

    bool operator==(const DistSpec &other) const noexcept = default;

  private:
    DistSpec(DistKind k, double a, double b) noexcept : kind_v(k), p1(a), p2(b) {}

    DistKind kind_v = DistKind::beta;
    double p1 = 1.0;
    double p2 = 1.0;
};

// --- individual samplers ---------------------------------------------------

// Beta(A, B) variate in [0,1]; A = B = 1 short-circuits to a single uniform
// draw.  Throws std::invalid_argument for non-positive shapes.
double sample_beta(double A, double B, RandomStream &stream);

// Y = 1/(1+X) with X Rayleigh(B), via the inverse transform
// X = B * sqrt(-2 ln(1-U)).  Throws std::invalid_argument for B <= 0.
double sample_r_inv(double B, RandomStream &stream);

// Y = 1/(1+X) with X = exp(mu + sigma Z), Z standard normal.  Throws
// std::invalid_argument for sigma <= 0.
double sample_l_inv(double mu, double sigma, RandomStream &stream);

// Uniform phase on [0, 2*pi), independent of amplitude draws.
double sample_phase(RandomStream &stream);

// One complex channel entry: amplitude (consumed first) times e^{i phase}.
std::complex<double> sample_complex(const DistSpec &spec, RandomStream &stream);

// --- pure transforms (deterministic kernels of the samplers above) ---------
// Exposed so boundary values can be pinned exactly in tests: the samplers are
// these transforms applied to stream draws.

// 1/(1+X) at the Rayleigh inverse-CDF point X = B * sqrt(-2 ln(1-u)).
double r_inv_transform(double B, double u) noexcept;

// 1/(1+exp(mu + sigma z)).
double l_inv_transform(double mu, double sigma, double z) noexcept;

} // namespace shadowsim

#endif
