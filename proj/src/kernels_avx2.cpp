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

#include <shadowsim/kernels.hpp>

// AVX2+FMA variants of the inner loops.  This translation unit is the only
// one compiled with the AVX2 ISA enabled; whether it runs is decided by the
// dispatcher's CPU probe, never at compile time.  Results differ from the
// scalar reference only by floating-point reassociation (FMA contraction,
// 4-lane accumulation), which the equivalence tests bound at a relative
// tolerance of 1e-13.

#if defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

namespace shadowsim::kernels
{

// One 256-bit register holds two interleaved complex doubles
// [c0.re c0.im c1.re c1.im]; complex products use the standard
// permute / fmaddsub pattern:
//   even lanes: s.re*x.re - s.im*x.im   (real part)
//   odd lanes:  s.im*x.re + s.re*x.im   (imag part)
static void cmatvec_avx2(const cplx *s, std::size_t rows, std::size_t cols, const cplx *x, cplx *y)
{
    double *yd = reinterpret_cast<double *>(y);
    for (std::size_t i = 0; i < rows; ++i)
        y[i] = cplx(0.0, 0.0);

    const std::size_t pairs = rows / 2;
    for (std::size_t j = 0; j < cols; ++j)
    {
        const double *col = reinterpret_cast<const double *>(s + j * rows);
        const __m256d xr = _mm256_set1_pd(x[j].real());
        const __m256d xi = _mm256_set1_pd(x[j].imag());
        std::size_t i = 0;
        for (; i < pairs * 2; i += 2)
        {
            const __m256d sv = _mm256_loadu_pd(col + 2 * i);
            const __m256d ssw = _mm256_permute_pd(sv, 0x5); // swap re/im per complex
            const __m256d t = _mm256_mul_pd(ssw, xi);
            const __m256d p = _mm256_fmaddsub_pd(sv, xr, t);
            const __m256d acc = _mm256_add_pd(_mm256_loadu_pd(yd + 2 * i), p);
            _mm256_storeu_pd(yd + 2 * i, acc);
        }
        if (i < rows) // odd trailing row
            y[i] += s[j * rows + i] * x[j];
    }
}

static double magsq_dot_avx2(const double *amp, const cplx *c, std::size_t n)
{
    const double *cd = reinterpret_cast<const double *>(c);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
    {
        const __m256d a = _mm256_loadu_pd(amp + i);
        const __m256d c01 = _mm256_loadu_pd(cd + 2 * i);
        const __m256d c23 = _mm256_loadu_pd(cd + 2 * i + 4);
        // |c|^2 per complex; hadd interleaves the two source registers
        // 128-bit-lane-wise, giving [|c0|^2 |c2|^2 |c1|^2 |c3|^2].
        const __m256d m = _mm256_hadd_pd(_mm256_mul_pd(c01, c01), _mm256_mul_pd(c23, c23));
        // Match the amplitude lanes to that order: [a0 a2 a1 a3].
        const __m256d ap = _mm256_permute4x64_pd(a, 0xD8);
        acc = _mm256_fmadd_pd(_mm256_mul_pd(ap, ap), m, acc);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double sum = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    for (; i < n; ++i)
        sum += amp[i] * amp[i] * std::norm(c[i]);
    return sum;
}

namespace detail
{
const Kernels *avx2_kernels_if_built() noexcept
{
    static const Kernels k = {"avx2", &cmatvec_avx2, &magsq_dot_avx2};
    return &k;
}
} // namespace detail

} // namespace shadowsim::kernels

#else // AVX2 not enabled for this build

namespace shadowsim::kernels::detail
{
const Kernels *avx2_kernels_if_built() noexcept
{
    return nullptr;
}
} // namespace shadowsim::kernels::detail

#endif
