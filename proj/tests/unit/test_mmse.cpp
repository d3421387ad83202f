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

#include <doctest.h>

#include <cmath>

#include "ibrelay/bounds.hpp"
#include "ibrelay/mmse.hpp"

using namespace ibrelay;

TEST_CASE("mmse_params: shrinkage ratio and representation noise") {
    const ChannelConfig cfg = ChannelConfig::from_snr_db(ChannelDims(2, 2), 10.0, 8.0);
    const MmseParams p = mmse_params(cfg);
    CHECK(p.e_ratio == doctest::Approx(0.8323819988).epsilon(1e-8));
    CHECK(p.e_ratio > 0.0);
    CHECK(p.e_ratio < 1.0);
    // compression budget is met exactly: K log2(1 + (T/(D K)) e) = C
    const double lhs =
        cfg.dims.k * std::log2(1.0 + p.e_ratio * cfg.dims.t() / (p.d_noise * cfg.dims.k));
    CHECK(lhs == doctest::Approx(cfg.capacity_bits).epsilon(1e-9));
}

TEST_CASE("mmse_params: limiting behaviour") {
    // representation noise vanishes as the budget grows
    const MmseParams big = mmse_params(ChannelConfig(ChannelDims(2, 2), 0.1, 400.0));
    CHECK(big.d_noise < 1e-55);
    // shrinkage ratio approaches one at high SNR
    const MmseParams hi = mmse_params(ChannelConfig(ChannelDims(1, 1), 1e-9, 8.0));
    CHECK(hi.e_ratio > 1.0 - 1e-6);
    CHECK_THROWS_AS(mmse_params(ChannelConfig(ChannelDims(2, 2), 0.1, 0.0)), std::domain_error);
}

TEST_CASE("mmse_rate: nearly meets a small budget at high SNR") {
    const ChannelConfig cfg = ChannelConfig::from_snr_db(ChannelDims(2, 2), 40.0, 2.0);
    CHECK(mmse_rate(cfg) == doctest::Approx(2.0).epsilon(0.02));
}

TEST_CASE("mmse_rate: K > M runs and can clamp") {
    // exercises the (K - T) log2 D term; at a large budget the bound is
    // vacuous for K > M and clamps to zero with the diagnostic set
    const ChannelConfig cfg = ChannelConfig::from_snr_db(ChannelDims(4, 2), 40.0, 40.0);
    const MmseRateResult r = mmse_rate_detail(cfg);
    CHECK(r.clamped);
    CHECK(r.raw_bits < 0.0);
    CHECK(r.rate_bits == 0.0);
    // a modest budget keeps it informative
    const ChannelConfig small = ChannelConfig::from_snr_db(ChannelDims(4, 2), 10.0, 4.0);
    const MmseRateResult r2 = mmse_rate_detail(small);
    CHECK(!r2.clamped);
    CHECK(r2.rate_bits > 0.0);
}

TEST_CASE("mmse_rate: non-decreasing in the budget") {
    double prev = -1.0;
    for (double c : {1.0, 2.0, 4.0, 8.0, 16.0, 32.0}) {
        const double r = mmse_rate(ChannelConfig(ChannelDims(2, 2), 0.1, c));
        CHECK(r >= prev - 1e-9);
        prev = r;
    }
}

TEST_CASE("mmse_rate: below the informed-receiver bound on a small lattice") {
    for (int k : {1, 2, 4})
        for (int m : {2, 4})
            for (double snr_db : {0.0, 20.0, 40.0})
                for (double c : {2.0, 20.0}) {
                    const ChannelConfig cfg =
                        ChannelConfig::from_snr_db(ChannelDims(k, m), snr_db, c);
                    CHECK(mmse_rate(cfg) <= upper_bound(cfg) + 1e-6);
                }
}

TEST_CASE("mmse_limits: large-budget constant") {
    const ChannelConfig cfg = ChannelConfig::from_snr_db(ChannelDims(2, 2), 10.0, 1000.0);
    const MmseLimits lim = mmse_limits(cfg);
    CHECK(lim.limit_large_m_or_snr == 1000.0);
    CHECK(lim.limit_large_c <= capacity(cfg));
    CHECK(std::fabs(mmse_rate(cfg) - lim.limit_large_c) <= 1e-2);
    CHECK(lim.limit_large_c == doctest::Approx(4.9634052).epsilon(1e-6));
}

TEST_CASE("mmse_limits: budget met asymptotically at high SNR") {
    const ChannelConfig cfg(ChannelDims(2, 2), 1e-6, 8.0);
    CHECK(mmse_rate(cfg) >= 0.99 * 8.0);
}
