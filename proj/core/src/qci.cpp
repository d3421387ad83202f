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

#include "ibrelay/qci.hpp"

#include <cmath>
#include <cstdio>

namespace ibrelay {

namespace {

// Feasibility slack on the budget in bits.
constexpr double kBudgetSlack = 1e-9;

}  // namespace

QciAllocation qci_waterfill(const QuantGrid& grid, int k, double c_total_bits) {
    const int j_levels = grid.levels();
    if (j_levels < 2)
        throw std::invalid_argument("qci_waterfill: grid needs at least one finite level");
    if (k < 1) throw std::invalid_argument("qci_waterfill: k must be >= 1");

    const double feedback_bits = k * grid.entropy_bits;
    const double budget = c_total_bits - feedback_bits;
    if (budget < kBudgetSlack) {
        char msg[160];
        std::snprintf(msg, sizeof(msg),
                      "qci_waterfill: budget %.6g bits does not cover the CSI feedback cost "
                      "K*H0 = %.6g bits",
                      c_total_bits, feedback_bits);
        throw InfeasibleBudget(msg);
    }

    QciAllocation alloc;
    alloc.level_snrs.resize(j_levels, 0.0);
    for (int j = 0; j + 1 < j_levels; ++j) alloc.level_snrs[j] = 1.0 / grid.points[j];

    std::vector<double> log2_snr(j_levels - 1);
    for (int j = 0; j + 1 < j_levels; ++j) log2_snr[j] = std::log2(alloc.level_snrs[j]);

    // Sweep the active-level count; levels are already in decreasing-SNR
    // order because the grid points are non-decreasing.
    const double per_input = budget / k;
    bool solved = false;
    for (int l = 1; l < j_levels && !solved; ++l) {
        double wsum = 0.0;
        double wlog = 0.0;
        for (int j = 0; j < l; ++j) {
            if (grid.pmf[j] <= 0.0) continue;
            wsum += grid.pmf[j];
            wlog += grid.pmf[j] * log2_snr[j];
        }
        if (wsum <= 0.0) continue;
        const double log2_nu = (wlog - per_input) / wsum;
        bool ok = true;
        for (int j = 0; j < l && ok; ++j)
            if (grid.pmf[j] > 0.0 && log2_snr[j] < log2_nu - 1e-12) ok = false;
        for (int j = l; j + 1 < j_levels && ok; ++j)
            if (grid.pmf[j] > 0.0 && log2_snr[j] > log2_nu + 1e-12) ok = false;
        if (!ok) continue;
        alloc.log2_nu = log2_nu;
        alloc.nu = std::exp2(log2_nu);
        alloc.active_levels = l;
        solved = true;
    }
    if (!solved)
        throw std::runtime_error("qci_waterfill: active-set sweep found no feasible level count");

    alloc.c_bits.assign(j_levels, 0.0);
    for (int j = 0; j + 1 < j_levels; ++j)
        alloc.c_bits[j] = std::max(0.0, log2_snr[j] - alloc.log2_nu);
    return alloc;
}

double qci_rate(const QuantGrid& grid, const QciAllocation& alloc, int k) {
    if (alloc.level_snrs.size() != grid.pmf.size())
        throw std::invalid_argument("qci_rate: allocation does not match grid");
    double rate = 0.0;
    for (int j = 0; j + 1 < grid.levels(); ++j) {
        if (grid.pmf[j] <= 0.0) continue;
        rate += k * grid.pmf[j] * scalar_ib_rate(alloc.level_snrs[j], alloc.c_bits[j]);
    }
    return rate;
}

double qci_quantile_rate(const ChannelConfig& cfg, int j_levels, const NoiseLevelDensity& density) {
    if (density.dims().k != cfg.dims.k || density.dims().m != cfg.dims.m)
        throw std::invalid_argument("qci_quantile_rate: density dims differ from config");
    if (std::fabs(density.sigma2() - cfg.sigma2) > 1e-12 * cfg.sigma2)
        throw std::invalid_argument("qci_quantile_rate: density sigma2 differs from config");
    const double feedback_per_input = std::log2(static_cast<double>(j_levels));
    if (feedback_per_input >= cfg.capacity_bits / cfg.dims.k - kBudgetSlack) {
        char msg[160];
        std::snprintf(msg, sizeof(msg),
                      "qci_quantile_rate: %d quantization bits per sub-channel do not fit a "
                      "budget of %.6g bits over %d inputs",
                      static_cast<int>(feedback_per_input), cfg.capacity_bits, cfg.dims.k);
        throw InfeasibleBudget(msg);
    }
    const QuantGrid grid = density.quantiles(j_levels);
    const QciAllocation alloc = qci_waterfill(grid, cfg.dims.k, cfg.capacity_bits);
    return qci_rate(grid, alloc, cfg.dims.k);
}

QciLimits qci_limits(const ChannelConfig& cfg, const NoiseLevelDensity& density) {
    QciLimits lim;
    lim.limit_large_m_or_snr = cfg.capacity_bits;
    lim.limit_large_c = cfg.dims.k * density.expectation([](double a) {
        return std::log1p(1.0 / a) * 1.4426950408889634;
    });
    return lim;
}

double qci_limit_rate(const ChannelConfig& cfg, const NoiseLevelDensity& density) {
    return qci_limits(cfg, density).limit_large_c;
}

double repr_fading(double level, double rate_bits) {
    if (!(level > 0.0)) throw std::domain_error("repr_fading: level must be positive");
    if (std::isinf(level)) return 0.0;  // silent sub-channel
    // (1/b + 2^c)/(1+b) - 1/b reduces exactly to (2^c - 1)/(1 + b).
    const double radicand = std::expm1(rate_bits * 0.6931471805599453) / (1.0 + level);
    if (radicand < 0.0) throw std::domain_error("repr_fading: negative radicand");
    return std::sqrt(radicand);
}

}  // namespace ibrelay
