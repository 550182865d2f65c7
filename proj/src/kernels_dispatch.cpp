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

#include <stdexcept>

namespace shadowsim::kernels
{

namespace detail
{
// Defined in kernels_avx2.cpp; nullptr when that TU was built without AVX2.
const Kernels *avx2_kernels_if_built() noexcept;
} // namespace detail

const Kernels *avx2_kernels() noexcept
{
    static const Kernels *probed = []() -> const Kernels * {
        const Kernels *built = detail::avx2_kernels_if_built();
        if (built == nullptr)
            return nullptr;
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
        if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
            return built;
#endif
        return nullptr;
    }();
    return probed;
}

static const Kernels *g_active = nullptr;

const Kernels &active() noexcept
{
    if (g_active == nullptr)
        g_active = (avx2_kernels() != nullptr) ? avx2_kernels() : &scalar_kernels();
    return *g_active;
}

void select(Select choice)
{
    switch (choice)
    {
    case Select::automatic:
        g_active = (avx2_kernels() != nullptr) ? avx2_kernels() : &scalar_kernels();
        return;
    case Select::scalar:
        g_active = &scalar_kernels();
        return;
    case Select::avx2:
        if (avx2_kernels() == nullptr)
            throw std::invalid_argument("kernel variant 'avx2' is not supported on this machine");
        g_active = avx2_kernels();
        return;
    }
    throw std::invalid_argument("unknown kernel variant");
}

} // namespace shadowsim::kernels
