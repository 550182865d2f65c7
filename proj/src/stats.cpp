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

#include <shadowsim/stats.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace shadowsim
{

double to_db(double p)
{
    if (!(p > 0.0))
        throw std::domain_error("dB conversion requires a strictly positive power");
    return 10.0 * std::log10(p);
}

double sample_mean(std::span<const double> samples)
{
    if (samples.empty())
        throw std::invalid_argument("mean of an empty sample set");
    double sum = 0.0;
    for (double v : samples)
        sum += v;
    return sum / static_cast<double>(samples.size());
}

std::vector<double> center(std::vector<double> samples)
{
    const double mean = sample_mean(samples); // throws on empty input
    for (double &v : samples)
        v -= mean;
    return samples;
}

double sample_std(std::span<const double> samples)
{
    if (samples.size() < 2)
        throw std::invalid_argument("standard deviation needs at least two samples");
    const double mean = sample_mean(samples);
    double ss = 0.0;
    for (double v : samples)
        ss += (v - mean) * (v - mean);
    return std::sqrt(ss / static_cast<double>(samples.size() - 1));
}

NormalFit fit_normal(std::span<const double> samples)
{
    const double std_db = sample_std(samples); // validates n >= 2
    if (!(std_db > 0.0))
        throw std::invalid_argument("normal fit needs non-constant samples");
    return NormalFit{sample_mean(samples), std_db};
}

double normal_cdf(double z) noexcept
{
    return 0.5 * std::erfc(-z / std::numbers::sqrt2);
}

KsResult ks_statistic(std::span<const double> samples, const NormalFit &fit)
{
    if (samples.size() < 2)
        throw std::invalid_argument("K-S statistic needs at least two samples");
    if (!(fit.std_db > 0.0))
        throw std::invalid_argument("K-S statistic needs a positive fitted std");

    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());

    const double n = static_cast<double>(sorted.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i)
    {
        const double f = normal_cdf((sorted[i] - fit.mean_db) / fit.std_db);
        const double above = (static_cast<double>(i) + 1.0) / n - f; // step after x_(i)
        const double below = f - static_cast<double>(i) / n;         // step before x_(i)
        d = std::max(d, std::max(above, below));
    }
    return KsResult{d, sorted.size(), fit};
}

double ks_critical(double alpha, std::size_t n)
{
    if (n < 35)
        throw std::invalid_argument("K-S critical value is implemented for the asymptotic regime (n >= 35)");
    double c = 0.0;
    if (alpha == 0.10)
        c = 1.224;
    else if (alpha == 0.05)
        c = 1.358;
    else if (alpha == 0.01)
        c = 1.628;
    else
        throw std::invalid_argument("unsupported K-S significance level (use 0.10, 0.05, or 0.01)");
    return c / std::sqrt(static_cast<double>(n));
}

EmpiricalCdf::EmpiricalCdf(std::vector<double> samples) : sorted(std::move(samples))
{
    if (sorted.empty())
        throw std::invalid_argument("empirical CDF of an empty sample set");
    std::sort(sorted.begin(), sorted.end());
}

double EmpiricalCdf::operator()(double x) const noexcept
{
    const auto it = std::upper_bound(sorted.begin(), sorted.end(), x);
    return static_cast<double>(it - sorted.begin()) / static_cast<double>(sorted.size());
}

} // namespace shadowsim
