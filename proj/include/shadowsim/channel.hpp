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

#ifndef shadowsim_channel_H
#define shadowsim_channel_H

#include <complex>
#include <cstddef>
#include <vector>

// The deterministic algebra of the layered channel.
//
// A transmission is modeled as M transmit rays coupled to N receive rays
// through an ordered cascade of K coupling layers S_1 ... S_K (S_1 acts on
// the transmit side first), giving the composite coupling matrix
//
//     S = S_K * S_{K-1} * ... * S_1            (N x M)
//
// and the bilinear received signal y = a^T S b.  The local mean power - the
// expectation of |y|^2 over the receive-ray phases - is the quadratic form
//
//     P = b^H S^H G_a S b,   G_a = diag(|a_1|^2 ... |a_N|^2)
//
// which reduces to the ray sum P = sum_n |a_n|^2 |c_n|^2 with c = S b.  All
// functions here are pure; values are immutable after construction and safe
// to share across threads.

namespace shadowsim
{

using cplx = std::complex<double>;
using cvec = std::vector<cplx>;

// One ray vector (receive a, length N; or transmit b, length M).  `amps`
// stores the amplitudes as originally sampled; power computations use these
// stored amplitudes - never |entries[i]| recomputed from the complex value -
// so the local mean power is *exactly* invariant under phase re-draws.
struct RayVector
{
    cvec entries;
    std::vector<double> amps;

    std::size_t size() const noexcept { return entries.size(); }
};

// Dense complex matrix in column-major storage; rectangular shapes are
// allowed (a coupling layer need not be square).
class CouplingMatrix
{
  public:
    CouplingMatrix() = default;
    CouplingMatrix(std::size_t rows, std::size_t cols) : rows_v(rows), cols_v(cols), e(rows * cols, cplx(0.0, 0.0)) {}

    static CouplingMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_v; }
    std::size_t cols() const noexcept { return cols_v; }

    cplx &at(std::size_t i, std::size_t j) noexcept { return e[j * rows_v + i]; }
    const cplx &at(std::size_t i, std::size_t j) const noexcept { return e[j * rows_v + i]; }

    cvec &entries() noexcept { return e; }
    const cvec &entries() const noexcept { return e; }

  private:
    std::size_t rows_v = 0;
    std::size_t cols_v = 0;
    cvec e;
};

// One local area's random draw.
struct ChannelRealization
{
    RayVector a;                         // receive rays (N)
    RayVector b;                         // transmit rays (M)
    std::vector<CouplingMatrix> layers;  // S_1 ... S_K, applied in this order
};

// Validates the dimension chain cols(S_1) = m, rows(S_k) = cols(S_{k+1}),
// rows(S_K) = n; an empty chain requires n == m (composite = identity).
// Throws std::invalid_argument naming the offending layer index (1-based).
void validate_chain(const std::vector<CouplingMatrix> &layers, std::size_t m, std::size_t n);

// Composite coupling matrix S = S_K ... S_1 by naive multiplication (this is
// the readable reference path; the Monte Carlo hot path never forms S).  An
// empty chain yields identity_dim x identity_dim identity; identity_dim = 0
// is an error in that case.
CouplingMatrix compose_coupling(const std::vector<CouplingMatrix> &layers, std::size_t identity_dim = 0);

// c = S_K ... S_1 * x applied layer by layer (dispatched matvec kernels).
cvec cascade(const std::vector<CouplingMatrix> &layers, const cvec &x);

// Bilinear received signal y = a^T S b (no conjugation).
cplx received_signal(const ChannelRealization &r);

// Local mean power via the ray sum P = sum_n |a_n|^2 |c_n|^2, c = S b.
double local_mean_power(const ChannelRealization &r);

// Local mean power via the literal quadratic form b^H S^H G_a S b with the
// composite S formed explicitly.  Reference path for the identity tests.
double local_mean_power_quadratic(const ChannelRealization &r);

// P = sum_n amps[n]^2 |c[n]|^2 (lengths must match).
double local_mean_power_raysum(const std::vector<double> &a_amps, const cvec &c);

// Product model: P = (sum_n |a_n|^2 |b_n|^2) * prod_k |s_k|^2.
double product_model_power(const RayVector &a, const RayVector &b, const cvec &scalars);

// Additive model: same arithmetic as the ray sum; the modeling difference
// (c held fixed across realizations) lives in the Monte Carlo layer.
double sum_model_power(const std::vector<double> &a_amps, const cvec &c_fixed);

// Line-of-sight layer: direct path with per-layer gain pl^(1/k_layers) in the
// top-left corner (so a cascade of k_layers such layers gives composite
// direct gain exactly pl), an (N-1)x(N-1) non-LOS block bottom-right, and no
// coupling between the two.  pl must lie in (0,1]; nlos must be square.
CouplingMatrix build_los_layer(double pl, std::size_t k_layers, const CouplingMatrix &nlos);

// Same, but with the per-layer direct gain given directly (for callers that
// prefer a different root convention).
CouplingMatrix build_los_layer_gain(double direct_gain, const CouplingMatrix &nlos);

// Checked pass-through builder for a keyhole chain: layer `keyhole_index`
// (1-based) must be a single-row matrix and the chain must still compose;
// the composite then has rank <= 1.
std::vector<CouplingMatrix> build_keyhole_layers(std::vector<CouplingMatrix> layers, std::size_t keyhole_index);

// Block-diagonal layer from square per-cluster blocks.
CouplingMatrix build_cluster_layer(const std::vector<CouplingMatrix> &blocks);

// Divides every entry by sqrt(n); normalizing all K (square, N x N) layers
// of a realization scales P by exactly N^(-K) and leaves the shape of the
// dB distribution unchanged.
CouplingMatrix normalize_layer(const CouplingMatrix &s, std::size_t n);

} // namespace shadowsim

#endif
