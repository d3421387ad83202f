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
#include "ibrelay/qci.hpp"

using namespace ibrelay;

namespace {

// Straightforward Simpson evaluation of the K=M=1 budget integral
//   g(nu) = int_nu^inf log2(lambda/nu) e^-lambda dlambda,
// independent of the library quadrature and densities.
double scalar_budget_simpson(double nu) {
    const double hi = nu + 60.0;
    const int n = 200000;  // even
    const double h = (hi - nu) / n;
    double sum = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double lam = nu + i * h;
        const double f = (lam > nu) ? std::log2(lam / nu) * std::exp(-lam) : 0.0;
        sum += (i == 0 || i == n) ? f : (i % 2 ? 4.0 * f : 2.0 * f);
    }
    return sum * h / 3.0;
}

}  // namespace

TEST_CASE("scalar_ib_rate: closed-form values") {
    CHECK(scalar_ib_rate(123.4, 0.0) == 0.0);
    CHECK(scalar_ib_rate(1.0, 60.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(scalar_ib_rate(1.0, 1.0) == doctest::Approx(1.0 - std::log2(1.5)).epsilon(1e-12));
    CHECK_THROWS_AS(scalar_ib_rate(-1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(scalar_ib_rate(1.0, -1.0), std::domain_error);
}

TEST_CASE("solve_water_level: scalar case against an independent Simpson oracle") {
    const ChannelConfig cfg(ChannelDims(1, 1), 1.0, 1.0);
    const WaterfillSolution sol = solve_water_level(cfg);
    // Bracket the root of g(nu) = 1 on a fine grid, independently.
    double lo = 0.05, hi = 2.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (scalar_budget_simpson(mid) > 1.0)
            lo = mid;
        else
            hi = mid;
    }
    const double oracle_nu = 0.5 * (lo + hi);
    CHECK(sol.nu == doctest::Approx(oracle_nu).epsilon(1e-7));
    // frozen from a high-resolution run of the same oracle
    CHECK(sol.log2_nu == doctest::Approx(-1.3020013225).epsilon(1e-8));
    CHECK(scalar_budget_simpson(sol.nu) == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("solve_water_level: water level falls as the budget grows") {
    const ChannelDims dims(2, 2);
    const double sigma2 = 0.1;
    const double nu_10 = solve_water_level(ChannelConfig(dims, sigma2, 10.0)).log2_nu;
    const double nu_100 = solve_water_level(ChannelConfig(dims, sigma2, 100.0)).log2_nu;
    CHECK(nu_100 < nu_10);
}

TEST_CASE("solve_water_level: budget constraint residual below 1e-9 bits") {
    for (double c : {1.0, 8.0, 40.0}) {
        const ChannelConfig cfg(ChannelDims(2, 2), 0.1, c);
        const WaterfillSolution sol = solve_water_level(cfg);
        const EigDensity density(cfg.dims);
        const double kink = sol.nu * cfg.sigma2;  // nu / rho
        const double spent =
            cfg.dims.t() * density.expectation_above(kink, [&](double lam) {
                return std::log2(cfg.snr() * lam) - sol.log2_nu;
            });
        CHECK(spent == doctest::Approx(c).epsilon(1e-10));
        CHECK(sol.spent_bits <= c + 1e-6);
        CHECK(sol.rate_bits <= sol.spent_bits);
    }
}

TEST_CASE("solve_water_level: degenerate zero budget") {
    const ChannelConfig cfg(ChannelDims(2, 2), 0.1, 0.0);
    const WaterfillSolution sol = solve_water_level(cfg);
    CHECK(sol.degenerate);
    CHECK(sol.rate_bits == 0.0);
    CHECK(upper_bound(cfg) == 0.0);
}

TEST_CASE("upper_bound: frozen value and sandwich at one point") {
    const ChannelConfig cfg(ChannelDims(1, 1), 1.0, 1.0);
    CHECK(upper_bound(cfg) == doctest::Approx(0.4519470690).epsilon(1e-8));
    const ChannelConfig wide(ChannelDims(2, 2), 1e-4, 40.0);
    const double ub = upper_bound(wide);
    CHECK(ub < 40.0);
    CHECK(ub <= capacity(wide) + 1e-6);
    // strictly between the best lower bound and the budget
    const NoiseLevelDensity density(wide.dims, wide.sigma2);
    const double best_lb = std::max(qci_quantile_rate(wide, 16, density), mmse_rate(wide));
    CHECK(best_lb < ub);
}

TEST_CASE("upper_bound: clipped allocation equals the split integral") {
    // The per-eigenvalue allocation max(0, log2(rho lam / nu)) vanishes
    // below the waterline, so integrating from 0 changes nothing.
    const ChannelConfig cfg(ChannelDims(2, 2), 0.1, 6.0);
    const WaterfillSolution sol = solve_water_level(cfg);
    const EigDensity density(cfg.dims);
    const double rho = cfg.snr();
    const double kink = sol.nu / rho;
    // allocation is continuous at the kink: value ~ 0 there
    CHECK(std::log2(rho * kink) - sol.log2_nu == doctest::Approx(0.0).epsilon(1e-9));
    auto clipped = [&](double lam) {
        return std::max(0.0, std::log2(rho * lam) - sol.log2_nu);
    };
    const double from_zero = density.expectation(clipped);
    const double from_kink = density.expectation_above(kink, [&](double lam) {
        return std::log2(rho * lam) - sol.log2_nu;
    });
    CHECK(from_zero == doctest::Approx(from_kink).epsilon(1e-10));
}

TEST_CASE("capacity: frozen values") {
    CHECK(capacity(ChannelConfig(ChannelDims(1, 1), 1.0, 1.0)) ==
          doctest::Approx(0.8603473823).epsilon(1e-8));
    CHECK(capacity(ChannelConfig::from_snr_db(ChannelDims(2, 2), 10.0, 1.0)) ==
          doctest::Approx(7.1405203017).epsilon(1e-8));
    // vanishes with the SNR
    CHECK(capacity(ChannelConfig(ChannelDims(2, 2), 1e8, 1.0)) ==
          doctest::Approx(0.0).epsilon(1e-6));
}

TEST_CASE("ub_limits: identities") {
    const ChannelConfig cfg = ChannelConfig::from_snr_db(ChannelDims(2, 2), 10.0, 8.0);
    const UbLimits lim = ub_limits(cfg);
    CHECK(lim.limit_large_m == 8.0);
    CHECK(lim.limit_large_snr == 8.0);
    CHECK(lim.limit_large_c == doctest::Approx(capacity(cfg)).epsilon(1e-12));
}

TEST_CASE("upper_bound: monotone in budget, SNR and antennas") {
    double prev = -1.0;
    for (double c : {1.0, 2.0, 4.0, 8.0, 16.0}) {
        const double ub = upper_bound(ChannelConfig(ChannelDims(2, 2), 0.1, c));
        CHECK(ub >= prev - 1e-9);
        prev = ub;
    }
    prev = -1.0;
    for (double snr_db : {0.0, 5.0, 10.0, 15.0, 20.0}) {
        const double ub =
            upper_bound(ChannelConfig::from_snr_db(ChannelDims(2, 2), snr_db, 8.0));
        CHECK(ub >= prev - 1e-9);
        prev = ub;
    }
    prev = -1.0;
    for (int m : {2, 4, 8}) {
        const double ub = upper_bound(ChannelConfig(ChannelDims(2, m), 0.1, 8.0));
        CHECK(ub >= prev - 1e-9);
        prev = ub;
    }
}

TEST_CASE("upper_bound: bounded by budget and capacity on a small lattice") {
    for (int k : {1, 2})
        for (int m : {1, 3})
            for (double snr_db : {0.0, 20.0})
                for (double c : {2.0, 20.0}) {
                    const ChannelConfig cfg =
                        ChannelConfig::from_snr_db(ChannelDims(k, m), snr_db, c);
                    const double ub = upper_bound(cfg);
                    CHECK(ub >= 0.0);
                    CHECK(ub <= std::min(c, capacity(cfg)) + 1e-6);
                }
}
