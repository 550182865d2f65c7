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

#ifndef shadowsim_stats_H
#define shadowsim_stats_H

#include <cstddef>
#include <span>
#include <vector>

// dB conversion, centering, empirical CDF, moment-fitted normal, and the
// Kolmogorov-Smirnov distance used to quantify closeness to log-normality.
//
// Convention: power samples are compared on the 10*log10 scale throughout.
// The K-S reference is the normal distribution fitted to the same samples by
// moments (sample mean, n-1 standard deviation), which makes the statistic
// invariant under affine transforms of the data - the comparison isolates
// distribution *shape*, as intended when judging convergence speed rather
// than testing a hypothesis.

namespace shadowsim
{

struct NormalFit
{
    double mean_db;
    double std_db;
};

struct KsResult
{
    double statistic;
    std::size_t n;
    NormalFit fit;
};

// 10*log10(p); throws std::domain_error for p <= 0 (and for NaN).
double to_db(double p);

// Subtracts the sample mean (result mean is 0 dB up to rounding).  Throws
// std::invalid_argument on empty input.
std::vector<double> center(std::vector<double> samples);

double sample_mean(std::span<const double> samples); // throws if empty

// n-1 divisor standard deviation; throws std::invalid_argument for n < 2.
double sample_std(std::span<const double> samples);

// Moment fit; throws std::invalid_argument for n < 2 or constant samples.
NormalFit fit_normal(std::span<const double> samples);

// Standard normal CDF via the complementary error function (absolute error
// well below 1e-10, far finer than the ~1e-3 K-S resolution at n = 1e5).
double normal_cdf(double z) noexcept;

// Two-sided K-S distance between the empirical CDF of `samples` and the
// normal CDF given by `fit`:
//   D = max_i max( i/n - F(x_(i)),  F(x_(i)) - (i-1)/n ).
KsResult ks_statistic(std::span<const double> samples, const NormalFit &fit);

// Asymptotic critical value c(alpha)/sqrt(n) with c(0.10) = 1.224,
// c(0.05) = 1.358, c(0.01) = 1.628; requires n >= 35 (asymptotic regime).
double ks_critical(double alpha, std::size_t n);

// Right-continuous empirical CDF F(x) = #{samples <= x} / n.
class EmpiricalCdf
{
  public:
    explicit EmpiricalCdf(std::vector<double> samples); // sorts; throws if empty

    double operator()(double x) const noexcept;
    const std::vector<double> &sorted_samples() const noexcept { return sorted; }
    std::size_t size() const noexcept { return sorted.size(); }

  private:
    std::vector<double> sorted;
};

} // namespace shadowsim

#endif
