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
#include <complex>
#include <cstring>
#include <stdexcept>
#include <vector>

#include <shadowsim/kernels.hpp>
#include <shadowsim/rng.hpp>

using shadowsim::RandomStream;
using shadowsim::substream;
using namespace shadowsim::kernels;

namespace
{

std::vector<cplx> random_cvec(RandomStream &stream, std::size_t n)
{
    std::vector<cplx> v(n);
    for (cplx &z : v)
        z = cplx(2.0 * stream.next_uniform() - 1.0, 2.0 * stream.next_uniform() - 1.0);
    return v;
}

std::vector<double> random_rvec(RandomStream &stream, std::size_t n)
{
    std::vector<double> v(n);
    for (double &x : v)
        x = stream.next_uniform();
    return v;
}

// Straight-line references the kernels must agree with.
std::vector<cplx> naive_cmatvec(const std::vector<cplx> &s, std::size_t rows, std::size_t cols,
                                const std::vector<cplx> &x)
{
    std::vector<cplx> y(rows, cplx(0.0, 0.0));
    for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t i = 0; i < rows; ++i)
            y[i] += s[j * rows + i] * x[j];
    return y;
}

double naive_magsq_dot(const std::vector<double> &amp, const std::vector<cplx> &c)
{
    double acc = 0.0;
    for (std::size_t i = 0; i < amp.size(); ++i)
        acc += amp[i] * amp[i] * std::norm(c[i]);
    return acc;
}

double rel_err(const cplx &a, const cplx &b)
{
    const double scale = std::max(1.0, std::max(std::abs(a), std::abs(b)));
    return std::abs(a - b) / scale;
}

void check_variant(const Kernels &k)
{
    RandomStream stream = substream(11, 0);

    // Sizes chosen to exercise SIMD main loops and scalar tails: vector
    // widths below, at, and straddling the 4-lane blocks.
    const std::size_t sizes[] = {1, 2, 3, 4, 5, 7, 8, 9, 13, 16, 31, 64, 100, 257};

    for (std::size_t rows : sizes)
    {
        for (std::size_t cols : {std::size_t{1}, std::size_t{3}, std::size_t{8}, std::size_t{17}})
        {
            const std::vector<cplx> s = random_cvec(stream, rows * cols);
            const std::vector<cplx> x = random_cvec(stream, cols);
            std::vector<cplx> y(rows, cplx(-7.0, -7.0));
            k.cmatvec(s.data(), rows, cols, x.data(), y.data());

            const std::vector<cplx> ref = naive_cmatvec(s, rows, cols, x);
            for (std::size_t i = 0; i < rows; ++i)
                REQUIRE(rel_err(y[i], ref[i]) < 1e-13);
        }
    }

    for (std::size_t n : sizes)
    {
        const std::vector<double> amp = random_rvec(stream, n);
        const std::vector<cplx> c = random_cvec(stream, n);
        const double got = k.magsq_dot(amp.data(), c.data(), n);
        const double ref = naive_magsq_dot(amp, c);
        REQUIRE(std::abs(got - ref) <= 1e-13 * std::max(1.0, std::abs(ref)));
    }
}

} // namespace

TEST_CASE("scalar kernels match the straight-line references")
{
    check_variant(scalar_kernels());
}

TEST_CASE("avx2 kernels match the straight-line references")
{
    const Kernels *k = avx2_kernels();
    if (k == nullptr)
        return; // CPU or build without AVX2; nothing to compare
    check_variant(*k);
}

TEST_CASE("scalar and avx2 agree on identical inputs")
{
    const Kernels *avx = avx2_kernels();
    if (avx == nullptr)
        return;
    const Kernels &ref = scalar_kernels();

    RandomStream stream = substream(12, 0);
    for (std::size_t rows : {std::size_t{1}, std::size_t{5}, std::size_t{10}, std::size_t{33}, std::size_t{100}})
    {
        const std::size_t cols = rows == 1 ? 1 : rows - 1;
        const std::vector<cplx> s = random_cvec(stream, rows * cols);
        const std::vector<cplx> x = random_cvec(stream, cols);
        std::vector<cplx> ya(rows), yb(rows);
        ref.cmatvec(s.data(), rows, cols, x.data(), ya.data());
        avx->cmatvec(s.data(), rows, cols, x.data(), yb.data());
        for (std::size_t i = 0; i < rows; ++i)
            REQUIRE(rel_err(ya[i], yb[i]) < 1e-13);

        const std::vector<double> amp = random_rvec(stream, rows);
        const std::vector<cplx> c = random_cvec(stream, rows);
        const double pa = ref.magsq_dot(amp.data(), c.data(), rows);
        const double pb = avx->magsq_dot(amp.data(), c.data(), rows);
        REQUIRE(std::abs(pa - pb) <= 1e-13 * std::max(1.0, std::abs(pa)));
    }
}

TEST_CASE("exact kernel values on hand-computed inputs")
{
    // S = [[1+i, 2], [0, -i]] column-major, x = [1, i]:
    //   y0 = (1+i)*1 + 2*i = 1 + 3i
    //   y1 = 0*1 + (-i)*i  = 1
    const cplx s[] = {cplx(1, 1), cplx(0, 0), cplx(2, 0), cplx(0, -1)};
    const cplx x[] = {cplx(1, 0), cplx(0, 1)};
    cplx y[2];
    scalar_kernels().cmatvec(s, 2, 2, x, y);
    CHECK(y[0] == cplx(1, 3));
    CHECK(y[1] == cplx(1, 0));

    // amp = [2, 3], c = [1+i, 2i]: 4*2 + 9*4 = 44.
    const double amp[] = {2.0, 3.0};
    const cplx c[] = {cplx(1, 1), cplx(0, 2)};
    CHECK(scalar_kernels().magsq_dot(amp, c, 2) == 44.0);
}

TEST_CASE("kernel selection")
{
    select(Select::scalar);
    CHECK(std::strcmp(active().name, "scalar") == 0);

    if (avx2_kernels() != nullptr)
    {
        select(Select::avx2);
        CHECK(std::strcmp(active().name, "avx2") == 0);
    }
    else
    {
        CHECK_THROWS_AS(select(Select::avx2), std::invalid_argument);
    }

    select(Select::automatic);
    CHECK((std::strcmp(active().name, "scalar") == 0 || std::strcmp(active().name, "avx2") == 0));

    // Restore the default for any later tests in this binary.
    select(Select::automatic);
}
