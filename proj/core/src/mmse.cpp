// SPDX-License-Identifier: Apache-2.0
//
// ibrelay - bottleneck-rate bounds for an oblivious MIMO relay over
// i.i.d. Rayleigh fading
// Copyright (C) 2026 the ibrelay authors
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

#include "ibrelay/mmse.hpp"

#include <algorithm>
#include <cmath>

namespace ibrelay {

namespace {

// Expectations here can be log-singular at 0 when K == M, and the
// integrands turn over at the scale sigma2, so integrate adaptively with a
// split there instead of using the density's default rule.
double split_expectation(const EigDensity& density, double sigma2,
                         const std::function<double(double)>& g) {
    auto f = [&](double lam) { return g(lam) * density.pdf(lam); };
    const double hi = density.upper_cut();
    const double split = std::clamp(sigma2, hi * 1e-12, 0.5 * hi);
    const QuadratureRule rule = QuadratureRule::adaptive(5e-12);
    return integrate(f, 0.0, split, rule) + integrate(f, split, hi, rule);
}

}  // namespace

MmseParams mmse_params(const ChannelConfig& cfg) {
    if (cfg.capacity_bits <= 0.0)
        throw std::domain_error("mmse_params: degenerate budget, representation noise undefined");
    const EigDensity density(cfg.dims);
    const double s2 = cfg.sigma2;
    MmseParams p;
    p.e_ratio = split_expectation(density, s2, [&](double lam) { return lam / (lam + s2); });
    const double t_over_k = static_cast<double>(cfg.dims.t()) / cfg.dims.k;
    p.d_noise = t_over_k * p.e_ratio / std::expm1(cfg.capacity_bits / cfg.dims.k * 0.6931471805599453);
    return p;
}

MmseRateResult mmse_rate_detail(const ChannelConfig& cfg) {
    const MmseParams p = mmse_params(cfg);
    const EigDensity density(cfg.dims);
    const double s2 = cfg.sigma2;
    const double t = cfg.dims.t();
    const double k = cfg.dims.k;
    const double d = p.d_noise;

    const double mean_log_shifted = split_expectation(
        density, s2, [&](double lam) { return std::log2(lam / (lam + s2) + d); });
    const double t_over_k = t / k;
    const double g_diag = t_over_k * p.e_ratio - t_over_k * t_over_k * p.e_ratio * p.e_ratio + d;

    MmseRateResult r;
    r.raw_bits = t * mean_log_shifted + (k - t) * std::log2(d) - k * std::log2(g_diag);
    r.clamped = r.raw_bits < 0.0;
    r.rate_bits = std::max(0.0, r.raw_bits);
    return r;
}

double mmse_rate(const ChannelConfig& cfg) { return mmse_rate_detail(cfg).rate_bits; }

MmseLimits mmse_limits(const ChannelConfig& cfg) {
    const EigDensity density(cfg.dims);
    const double s2 = cfg.sigma2;
    const double k = cfg.dims.k;
    const double e_ratio =
        split_expectation(density, s2, [&](double lam) { return lam / (lam + s2); });
    MmseLimits lim;
    lim.limit_large_m_or_snr = cfg.capacity_bits;
    const double mean_log_ratio = split_expectation(
        density, s2, [&](double lam) { return std::log2(lam) - std::log2(lam + s2); });
    lim.limit_large_c = k * mean_log_ratio - k * std::log2(e_ratio - e_ratio * e_ratio);
    return lim;
}

}  // namespace ibrelay
