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

#include "ibrelay/bounds.hpp"

#include <cmath>

namespace ibrelay {

namespace {

constexpr double kInvLn2 = 1.4426950408889634;

double log2_1p(double x) { return std::log1p(x) * kInvLn2; }

// log2(1 + 2^l) without forming 2^l when it would overflow.
double log2_1p_exp2(double l) {
    if (l > 50.0) return l + log2_1p(std::exp2(-l));
    return log2_1p(std::exp2(l));
}

// Lower integration limit nu/rho as exp2(log2_nu - log2_rho); underflows to 0.
double waterline_kink(double log2_nu, double log2_rho) {
    const double e = log2_nu - log2_rho;
    if (e < -1000.0) return 0.0;
    return std::exp2(e);
}

}  // namespace

double scalar_ib_rate(double snr_eff, double c_bits) {
    if (snr_eff < 0.0) throw std::domain_error("scalar_ib_rate: snr must be >= 0");
    if (c_bits < 0.0) throw std::domain_error("scalar_ib_rate: budget must be >= 0");
    return log2_1p(snr_eff) - log2_1p(snr_eff * std::exp2(-c_bits));
}

WaterfillSolution solve_water_level(const ChannelConfig& cfg) {
    WaterfillSolution sol;
    const double c_bits = cfg.capacity_bits;
    if (c_bits == 0.0) {
        sol.degenerate = true;
        return sol;
    }
    const EigDensity density(cfg.dims);
    const double t = cfg.dims.t();
    const double rho = cfg.snr();
    const double log2_rho = std::log2(rho);
    const double target = c_bits / t;

    auto spent = [&](double log2_nu) {
        const double kink = waterline_kink(log2_nu, log2_rho);
        return density.expectation_above(
            kink, [&](double lam) { return log2_rho + std::log2(lam) - log2_nu; });
    };

    double lo = log2_rho - 2.0 * target - 10.0;
    double hi = log2_rho + std::log2(static_cast<double>(cfg.dims.s())) + 10.0;
    while (spent(lo) < target) lo -= 50.0;
    while (spent(hi) > target) hi += 50.0;
    sol.log2_nu =
        bisect_monotone([&](double l) { return spent(l) - target; }, lo, hi, 1e-12);
    sol.nu = std::exp2(sol.log2_nu);
    sol.spent_bits = c_bits;

    const double kink = waterline_kink(sol.log2_nu, log2_rho);
    const double log2_1p_nu = log2_1p_exp2(sol.log2_nu);
    sol.rate_bits = t * density.expectation_above(kink, [&](double lam) {
        return log2_1p(rho * lam) - log2_1p_nu;
    });
    return sol;
}

double upper_bound(const ChannelConfig& cfg) {
    if (cfg.capacity_bits == 0.0) return 0.0;
    return solve_water_level(cfg).rate_bits;
}

double capacity(const ChannelConfig& cfg) {
    const EigDensity density(cfg.dims);
    const double rho = cfg.snr();
    return cfg.dims.t() *
           density.expectation([&](double lam) { return log2_1p(rho * lam); });
}

UbLimits ub_limits(const ChannelConfig& cfg) {
    UbLimits lim;
    lim.limit_large_m = cfg.capacity_bits;
    lim.limit_large_snr = cfg.capacity_bits;
    lim.limit_large_c = capacity(cfg);
    return lim;
}

}  // namespace ibrelay
