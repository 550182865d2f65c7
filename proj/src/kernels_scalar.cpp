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

// Reference kernels: straightforward loops, kept free of manual unrolling so
// they double as the readable specification the SIMD variants are tested
// against.

namespace shadowsim::kernels
{

static void cmatvec_scalar(const cplx *s, std::size_t rows, std::size_t cols, const cplx *x, cplx *y)
{
    for (std::size_t i = 0; i < rows; ++i)
        y[i] = cplx(0.0, 0.0);
    for (std::size_t j = 0; j < cols; ++j)
    {
        const cplx xj = x[j];
        const cplx *col = s + j * rows;
        for (std::size_t i = 0; i < rows; ++i)
            y[i] += col[i] * xj;
    }
}

static double magsq_dot_scalar(const double *amp, const cplx *c, std::size_t n)
{
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        acc += amp[i] * amp[i] * std::norm(c[i]);
    return acc;
}

const Kernels &scalar_kernels() noexcept
{
    static const Kernels k = {"scalar", &cmatvec_scalar, &magsq_dot_scalar};
    return k;
}

} // namespace shadowsim::kernels
