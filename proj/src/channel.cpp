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

#include <shadowsim/channel.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

#include <shadowsim/kernels.hpp>

namespace shadowsim
{

CouplingMatrix CouplingMatrix::identity(std::size_t n)
{
    CouplingMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = cplx(1.0, 0.0);
    return m;
}

void validate_chain(const std::vector<CouplingMatrix> &layers, std::size_t m, std::size_t n)
{
    if (layers.empty())
    {
        if (m != n)
            throw std::invalid_argument("empty coupling chain requires n == m (composite is identity), got n=" +
                                        std::to_string(n) + " m=" + std::to_string(m));
        return;
    }
    if (layers.front().cols() != m)
        throw std::invalid_argument("layer 1: expected " + std::to_string(m) + " columns (transmit rays), got " +
                                    std::to_string(layers.front().cols()));
    for (std::size_t k = 0; k + 1 < layers.size(); ++k)
    {
        if (layers[k].rows() != layers[k + 1].cols())
            throw std::invalid_argument("layer " + std::to_string(k + 2) + ": expected " +
                                        std::to_string(layers[k].rows()) + " columns to match the rows of layer " +
                                        std::to_string(k + 1) + ", got " + std::to_string(layers[k + 1].cols()));
    }
    if (layers.back().rows() != n)
        throw std::invalid_argument("layer " + std::to_string(layers.size()) + ": expected " + std::to_string(n) +
                                    " rows (receive rays), got " + std::to_string(layers.back().rows()));
}

static void validate_realization(const ChannelRealization &r)
{
    if (r.a.size() == 0 || r.b.size() == 0)
        throw std::invalid_argument("ray vectors must be non-empty");
    if (r.a.amps.size() != r.a.size() || r.b.amps.size() != r.b.size())
        throw std::invalid_argument("ray vector amplitudes out of sync with entries");
    validate_chain(r.layers, r.b.size(), r.a.size());
}

CouplingMatrix compose_coupling(const std::vector<CouplingMatrix> &layers, std::size_t identity_dim)
{
    if (layers.empty())
    {
        if (identity_dim == 0)
            throw std::invalid_argument("empty coupling chain needs an explicit identity dimension");
        return CouplingMatrix::identity(identity_dim);
    }
    validate_chain(layers, layers.front().cols(), layers.back().rows());

    CouplingMatrix acc = layers.front();
    for (std::size_t k = 1; k < layers.size(); ++k)
    {
        const CouplingMatrix &l = layers[k]; // next layer acts from the left
        CouplingMatrix next(l.rows(), acc.cols());
        for (std::size_t j = 0; j < acc.cols(); ++j)
            for (std::size_t p = 0; p < l.cols(); ++p)
            {
                const cplx v = acc.at(p, j);
                for (std::size_t i = 0; i < l.rows(); ++i)
                    next.at(i, j) += l.at(i, p) * v;
            }
        acc = std::move(next);
    }
    return acc;
}

cvec cascade(const std::vector<CouplingMatrix> &layers, const cvec &x)
{
    cvec cur = x;
    cvec next;
    for (const CouplingMatrix &l : layers)
    {
        if (l.cols() != cur.size())
            throw std::invalid_argument("cascade: layer dimensions do not chain");
        next.resize(l.rows());
        kernels::active().cmatvec(l.entries().data(), l.rows(), l.cols(), cur.data(), next.data());
        cur.swap(next);
    }
    return cur;
}

cplx received_signal(const ChannelRealization &r)
{
    validate_realization(r);
    const cvec c = cascade(r.layers, r.b.entries);
    cplx y(0.0, 0.0);
    for (std::size_t i = 0; i < c.size(); ++i)
        y += r.a.entries[i] * c[i]; // a^T, not a^H: bilinear form
    return y;
}

double local_mean_power(const ChannelRealization &r)
{
    validate_realization(r);
    const cvec c = cascade(r.layers, r.b.entries);
    return kernels::active().magsq_dot(r.a.amps.data(), c.data(), c.size());
}

double local_mean_power_quadratic(const ChannelRealization &r)
{
    validate_realization(r);
    const std::size_t n = r.a.size();
    const std::size_t m = r.b.size();
    const CouplingMatrix s = compose_coupling(r.layers, n);

    // G = S^H diag(|a|^2) S, then P = b^H G b (the imaginary part of the
    // quadratic form is zero up to rounding; the real part is returned).
    CouplingMatrix g(m, m);
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q < m; ++q)
        {
            cplx acc(0.0, 0.0);
            for (std::size_t i = 0; i < n; ++i)
                acc += std::conj(s.at(i, p)) * (r.a.amps[i] * r.a.amps[i]) * s.at(i, q);
            g.at(p, q) = acc;
        }
    cplx power(0.0, 0.0);
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q < m; ++q)
            power += std::conj(r.b.entries[p]) * g.at(p, q) * r.b.entries[q];
    return power.real();
}

double local_mean_power_raysum(const std::vector<double> &a_amps, const cvec &c)
{
    if (a_amps.size() != c.size())
        throw std::invalid_argument("ray sum: amplitude and ray counts differ");
    return kernels::active().magsq_dot(a_amps.data(), c.data(), c.size());
}

double product_model_power(const RayVector &a, const RayVector &b, const cvec &scalars)
{
    if (a.size() != b.size())
        throw std::invalid_argument("product model: a and b must have equal length");
    double raysum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        raysum += a.amps[i] * a.amps[i] * b.amps[i] * b.amps[i];
    double prod = 1.0;
    for (const cplx &s : scalars)
        prod *= std::norm(s);
    return raysum * prod;
}

double sum_model_power(const std::vector<double> &a_amps, const cvec &c_fixed)
{
    return local_mean_power_raysum(a_amps, c_fixed);
}

CouplingMatrix build_los_layer_gain(double direct_gain, const CouplingMatrix &nlos)
{
    if (!(direct_gain > 0.0) || direct_gain > 1.0)
        throw std::invalid_argument("LOS direct gain must lie in (0, 1]");
    if (nlos.rows() != nlos.cols() || nlos.rows() == 0)
        throw std::invalid_argument("LOS non-direct block must be square and non-empty");
    const std::size_t n = nlos.rows() + 1;
    CouplingMatrix layer(n, n);
    layer.at(0, 0) = cplx(direct_gain, 0.0);
    for (std::size_t j = 0; j < nlos.cols(); ++j)
        for (std::size_t i = 0; i < nlos.rows(); ++i)
            layer.at(i + 1, j + 1) = nlos.at(i, j);
    return layer;
}

CouplingMatrix build_los_layer(double pl, std::size_t k_layers, const CouplingMatrix &nlos)
{
    if (!(pl > 0.0) || pl > 1.0)
        throw std::invalid_argument("LOS path gain pl must lie in (0, 1]");
    if (k_layers == 0)
        throw std::invalid_argument("LOS layer count must be at least 1");
    return build_los_layer_gain(std::pow(pl, 1.0 / static_cast<double>(k_layers)), nlos);
}

std::vector<CouplingMatrix> build_keyhole_layers(std::vector<CouplingMatrix> layers, std::size_t keyhole_index)
{
    if (keyhole_index == 0 || keyhole_index > layers.size())
        throw std::invalid_argument("keyhole index must select one of the " + std::to_string(layers.size()) +
                                    " layers (1-based)");
    const CouplingMatrix &kh = layers[keyhole_index - 1];
    if (kh.rows() != 1)
        throw std::invalid_argument("keyhole layer " + std::to_string(keyhole_index) + " must have exactly 1 row, has " +
                                    std::to_string(kh.rows()));
    validate_chain(layers, layers.front().cols(), layers.back().rows());
    return layers;
}

CouplingMatrix build_cluster_layer(const std::vector<CouplingMatrix> &blocks)
{
    if (blocks.empty())
        throw std::invalid_argument("cluster layer needs at least one block");
    std::size_t total = 0;
    for (std::size_t l = 0; l < blocks.size(); ++l)
    {
        if (blocks[l].rows() != blocks[l].cols() || blocks[l].rows() == 0)
            throw std::invalid_argument("cluster block " + std::to_string(l + 1) + " must be square and non-empty");
        total += blocks[l].rows();
    }
    CouplingMatrix layer(total, total);
    std::size_t off = 0;
    for (const CouplingMatrix &blk : blocks)
    {
        for (std::size_t j = 0; j < blk.cols(); ++j)
            for (std::size_t i = 0; i < blk.rows(); ++i)
                layer.at(off + i, off + j) = blk.at(i, j);
        off += blk.rows();
    }
    return layer;
}

CouplingMatrix normalize_layer(const CouplingMatrix &s, std::size_t n)
{
    if (n < 1)
        throw std::invalid_argument("normalization ray count must be at least 1");
    const double inv = 1.0 / std::sqrt(static_cast<double>(n));
    CouplingMatrix out = s;
    for (cplx &v : out.entries())
        v *= inv;
    return out;
}

} // namespace shadowsim
