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

#include <shadowsim/distributions.hpp>

#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace shadowsim
{

// --- validation helpers -----------------------------------------------------

static void require_positive(double value, const char *what)
{
    if (!(value > 0.0) || !std::isfinite(value))
        throw std::invalid_argument(std::string(what) + " must be positive and finite");
}

static void require_finite(double value, const char *what)
{
    if (!std::isfinite(value))
        throw std::invalid_argument(std::string(what) + " must be finite");
}

// --- DistSpec ----------------------------------------------------------------

DistSpec DistSpec::beta(double A, double B)
{
    require_positive(A, "beta shape A");
    require_positive(B, "beta shape B");
    return DistSpec(DistKind::beta, A, B);
}

DistSpec DistSpec::r_inv(double B)
{
    require_positive(B, "r scale B");
    return DistSpec(DistKind::r_inv, B, 0.0);
}

DistSpec DistSpec::l_inv(double mu, double sigma)
{
    require_finite(mu, "l log-mean mu");
    require_positive(sigma, "l log-std sigma");
    return DistSpec(DistKind::l_inv, mu, sigma);
}

// Shortest round-trip decimal formatting (std::to_chars general form).
static std::string format_param(double v)
{
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string DistSpec::label() const
{
    switch (kind_v)
    {
    case DistKind::beta:
        return "beta:" + format_param(p1) + "," + format_param(p2);
    case DistKind::r_inv:
        return "r:" + format_param(p1);
    case DistKind::l_inv:
        return "l:" + format_param(p1) + "," + format_param(p2);
    }
    return {}; // unreachable
}

static double parse_number(std::string_view text, const char *what)
{
    double value = 0.0;
    const char *first = text.data();
    const char *last = text.data() + text.size();
    const auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc() || res.ptr != last || text.empty())
        throw std::invalid_argument(std::string("could not parse ") + what + " from '" + std::string(text) + "'");
    return value;
}

DistSpec DistSpec::parse(std::string_view text)
{
    const auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw std::invalid_argument("dist spec '" + std::string(text) +
                                    "': expected one of beta:A,B r:B l:mu,sigma");
    const std::string_view head = text.substr(0, colon);
    const std::string_view params = text.substr(colon + 1);
    const auto comma = params.find(',');

    try
    {
        if (head == "beta")
        {
            if (comma == std::string_view::npos)
                throw std::invalid_argument("expected two parameters beta:A,B");
            return beta(parse_number(params.substr(0, comma), "beta shape A"),
                        parse_number(params.substr(comma + 1), "beta shape B"));
        }
        if (head == "r")
        {
            if (comma != std::string_view::npos)
                throw std::invalid_argument("expected one parameter r:B");
            return r_inv(parse_number(params, "r scale B"));
        }
        if (head == "l")
        {
            if (comma == std::string_view::npos)
                throw std::invalid_argument("expected two parameters l:mu,sigma");
            return l_inv(parse_number(params.substr(0, comma), "l log-mean mu"),
                         parse_number(params.substr(comma + 1), "l log-std sigma"));
        }
    }
    catch (const std::invalid_argument &e)
    {
        throw std::invalid_argument("dist spec '" + std::string(text) + "': " + e.what());
    }
    throw std::invalid_argument("dist spec '" + std::string(text) + "': unknown family '" + std::string(head) +
                                "' (expected beta, r, or l)");
}

double DistSpec::sample_amplitude(RandomStream &stream) const
{
    switch (kind_v)
    {
    case DistKind::beta:
        return sample_beta(p1, p2, stream);
    case DistKind::r_inv:
        return sample_r_inv(p1, stream);
    case DistKind::l_inv:
        return sample_l_inv(p1, p2, stream);
    }
    return 0.0; // unreachable
}

// --- samplers ----------------------------------------------------------------

// Gamma(alpha, 1) via the Marsaglia-Tsang squeeze method; alpha < 1 handled
// with the standard power boost Gamma(alpha) = Gamma(alpha+1) * U^(1/alpha).
// Uses a variable number of stream draws per variate, which is safe here
// because every Monte Carlo realization owns a private substream.
static double sample_gamma(double alpha, RandomStream &stream)
{
    if (alpha < 1.0)
    {
        const double u = stream.next_uniform();
        // 1-u is in (0,1], so the boost factor is never an indeterminate 0^inf.
        return sample_gamma(alpha + 1.0, stream) * std::pow(1.0 - u, 1.0 / alpha);
    }
    const double d = alpha - 1.0 / 3.0;
    const double c = 1.0 / (3.0 * std::sqrt(d));
    for (;;)
    {
        double x, v;
        do
        {
            x = stream.next_normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = stream.next_uniform();
        if (u < 1.0 - 0.0331 * (x * x) * (x * x))
            return d * v;
        // u == 0 gives log(u) = -inf and is (correctly) always accepted.
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v)))
            return d * v;
    }
}

double sample_beta(double A, double B, RandomStream &stream)
{
    require_positive(A, "beta shape A");
    require_positive(B, "beta shape B");
    if (A == 1.0 && B == 1.0)
        return stream.next_uniform(); // uniform special case, single draw
    const double x = sample_gamma(A, stream);
    const double y = sample_gamma(B, stream);
    return x / (x + y); // both strictly positive, so never 0/0
}

double r_inv_transform(double B, double u) noexcept
{
    const double x = B * std::sqrt(-2.0 * std::log1p(-u));
    return 1.0 / (1.0 + x);
}

double sample_r_inv(double B, RandomStream &stream)
{
    require_positive(B, "r scale B");
    return r_inv_transform(B, stream.next_uniform());
}

double l_inv_transform(double mu, double sigma, double z) noexcept
{
    return 1.0 / (1.0 + std::exp(mu + sigma * z));
}

double sample_l_inv(double mu, double sigma, RandomStream &stream)
{
    require_finite(mu, "l log-mean mu");
    require_positive(sigma, "l log-std sigma");
    return l_inv_transform(mu, sigma, stream.next_normal());
}

double sample_phase(RandomStream &stream)
{
    const double p = 2.0 * std::numbers::pi * stream.next_uniform();
    // u < 1 guarantees p < 2*pi mathematically, but the product can round up
    // to exactly 2*pi for u within one ulp of 1; wrap that single point.
    return p < 2.0 * std::numbers::pi ? p : 0.0;
}

std::complex<double> sample_complex(const DistSpec &spec, RandomStream &stream)
{
    const double amp = spec.sample_amplitude(stream); // amplitude first,
    const double phase = sample_phase(stream);        // then phase
    return std::polar(amp, phase);
}

} // namespace shadowsim
