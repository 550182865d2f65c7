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

#ifndef shadowsim_kernels_H
#define shadowsim_kernels_H

#include <complex>
#include <cstddef>

// Numerical inner loops of the simulator, provided in two interchangeable
// variants:
//
//   scalar  - portable reference implementation (always available)
//   avx2    - AVX2+FMA implementation for x86-64, compiled in its own
//             translation unit with the ISA enabled
//
// The dispatcher probes the CPU once at startup and selects the fastest
// variant; `select()` can force a specific one (used by the equivalence
// tests and the CLI's --kernel flag).  Variants are equivalent up to
// floating-point reassociation, not bit-identical - the equivalence tests
// compare at a small relative tolerance.  Within one process the selected
// variant is fixed, so repeated runs on the same machine produce
// byte-identical results.
//
// Random variate generation is deliberately *not* vectorized: samples are
// always drawn by the same scalar code path, so the sampled channel entries
// are bit-identical no matter which kernel variant computes with them.

namespace shadowsim::kernels
{

using cplx = std::complex<double>;

struct Kernels
{
    const char *name;

    // y = S * x with S complex rows x cols, stored column-major
    // (entry (i,j) at s[j*rows + i]); y must not alias s or x.
    void (*cmatvec)(const cplx *s, std::size_t rows, std::size_t cols, const cplx *x, cplx *y);

    // sum_i amp[i]^2 * |c[i]|^2  (the ray-sum power reduction).
    double (*magsq_dot)(const double *amp, const cplx *c, std::size_t n);
};

// Portable reference kernels; always available.
const Kernels &scalar_kernels() noexcept;

// AVX2 kernels, or nullptr when unsupported (not compiled in, or the CPU
// lacks AVX2/FMA).
const Kernels *avx2_kernels() noexcept;

enum class Select
{
    automatic, // best available (AVX2 if supported, else scalar)
    scalar,
    avx2
};

// Forces a kernel variant for the whole process.  Throws
// std::invalid_argument if the requested variant is unsupported here.
// Not thread-safe; call before launching workers.
void select(Select choice);

// Currently selected kernels (automatic selection on first use).
const Kernels &active() noexcept;

} // namespace shadowsim::kernels

#endif
