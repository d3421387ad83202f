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
#include <complex>

#include "ibrelay/bounds.hpp"
#include "ibrelay/mmse.hpp"
#include "ibrelay/oracle.hpp"
#include "ibrelay/rng.hpp"

using namespace ibrelay;
using namespace ibrelay::oracle;

namespace {
constexpr std::uint64_t kSeed = kDefaultSeed;
}

TEST_CASE("rng: deterministic by (seed, stream) and streams differ") {
    PhiloxRng a(7, 3), b(7, 3), c(7, 4), d(8, 3);
    int equal_ab = 0, equal_ac = 0, equal_ad = 0;
    for (int i = 0; i < 10000; ++i) {
        const std::uint32_t va = a.next_u32();
        equal_ab += va == b.next_u32();
        equal_ac += va == c.next_u32();
        equal_ad += va == d.next_u32();
    }
    CHECK(equal_ab == 10000);
    CHECK(equal_ac <= 3);  // collisions of independent u32 draws are rare
    CHECK(equal_ad <= 3);
}

TEST_CASE("rng: complex gaussian moments") {
    PhiloxRng rng(kSeed, 0);
    const int n = 200000;
    std::complex<double> mean = 0.0;
    double mean_sq = 0.0;
    for (int i = 0; i < n; ++i) {
        const std::complex<double> z = rng.gaussian();
        mean += z;
        mean_sq += std::norm(z);
    }
    mean /= static_cast<double>(n);
    mean_sq /= n;
    CHECK(std::abs(mean) <= 3.0 / std::sqrt(static_cast<double>(n)));
    CHECK(mean_sq == doctest::Approx(1.0).epsilon(0.01));
}

TEST_CASE("sample_channel: bit-identical across calls, entry moments") {
    const ChannelDims dims(2, 2);
    const ChannelSample s1 = sample_channel(dims, kSeed, 42);
    const ChannelSample s2 = sample_channel(dims, kSeed, 42);
    CHECK(s1.h == s2.h);
    CHECK(sample_channel(dims, kSeed, 43).h != s1.h);

    const long n = 20000;
    double tr = 0.0;
    for (long i = 0; i < n; ++i) tr += sample_channel(dims, kSeed, i).h.squaredNorm();
    tr /= n;
    // E tr(H H^H) = M K = 4, per-sample sd = 2, keep 3 sigma
    CHECK(std::fabs(tr - 4.0) <= 3.0 * 2.0 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("gram eigensolve: residual and Sylvester determinant identity") {
    const ChannelDims dims(2, 4);
    const double sigma2 = 0.1;
    for (std::uint64_t s = 0; s < 8; ++s) {
        const Eigen::MatrixXcd h = sample_channel(dims, kSeed, s).h;
        const Eigen::MatrixXcd big = h * h.adjoint();  // M x M
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(big);
        REQUIRE(es.info() == Eigen::Success);
        const double scale = h.squaredNorm();
        for (int i = 0; i < big.rows(); ++i) {
            const double resid =
                (big * es.eigenvectors().col(i) - es.eigenvalues()(i) * es.eigenvectors().col(i))
                    .norm();
            CHECK(resid <= 1e-8 * scale);
        }
        // det(H H^H + s I_M) / s^M == det(H^H H + s I_K) / s^K
        const Eigen::MatrixXcd small = h.adjoint() * h;  // K x K
        const double lhs =
            std::log((big + sigma2 * Eigen::MatrixXcd::Identity(4, 4)).determinant().real()) -
            4 * std::log(sigma2);
        const double rhs =
            std::log((small + sigma2 * Eigen::MatrixXcd::Identity(2, 2)).determinant().real()) -
            2 * std::log(sigma2);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-8));
    }
}

TEST_CASE("empirical_eig_check: passes at a quick sample count and is reproducible") {
    const CheckReport r1 = empirical_eig_check(ChannelDims(2, 2), 5000, kSeed, 0.35);
    const CheckReport r2 = empirical_eig_check(ChannelDims(2, 2), 5000, kSeed, 0.35);
    CHECK(r1.pass);
    CHECK(r1.to_text() == r2.to_text());
}

TEST_CASE("empirical_capacity: matches the closed form at 10 dB") {
    const ChannelConfig cfg = ChannelConfig::from_snr_db(ChannelDims(2, 2), 10.0, 1.0);
    const double mc = empirical_capacity(cfg, 20000, kSeed);
    CHECK(std::fabs(mc / capacity(cfg) - 1.0) <= 0.01);
    // vanishes with the SNR
    const ChannelConfig low(ChannelDims(2, 2), 1e6, 1.0);
    CHECK(empirical_capacity(low, 2000, kSeed) <= 1e-4);
}

TEST_CASE("empirical_noise_levels: complex-gamma fits, half-dof does not") {
    const NoiseLevelCheck check =
        empirical_noise_levels(ChannelDims(2, 4), 0.1, 5000, kSeed, 0.35);
    CHECK(check.complex_gamma_fits);
    CHECK(!check.half_dof_fits);
    CHECK(check.report.pass);
    double mass = 0.0;
    for (double m : check.histogram.masses) mass += m;
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(empirical_noise_levels(ChannelDims(4, 2), 0.1, 100, kSeed),
                    UnsupportedConfig);
    // K = 1: the mean of 1/a is M / sigma2
    const long n = 20000;
    double inv_mean = 0.0;
    for (long i = 0; i < n; ++i) {
        const Eigen::MatrixXcd h = sample_channel(ChannelDims(1, 4), kSeed, i).h;
        inv_mean += h.squaredNorm() / 0.1;
    }
    inv_mean /= n;
    CHECK(inv_mean == doctest::Approx(4.0 / 0.1).epsilon(0.02));
}

TEST_CASE("mmse shrinkage ratio matches a Monte Carlo eigenvalue mean") {
    const ChannelConfig cfg = ChannelConfig::from_snr_db(ChannelDims(2, 2), 10.0, 8.0);
    const long n = 50000;
    double mc = 0.0;
    for (long i = 0; i < n; ++i) {
        const Eigen::MatrixXcd h = sample_channel(cfg.dims, kSeed, i).h;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h.adjoint() * h,
                                                           Eigen::EigenvaluesOnly);
        for (int t = 0; t < 2; ++t) mc += es.eigenvalues()(t) / (es.eigenvalues()(t) + cfg.sigma2);
    }
    mc /= 2.0 * n;
    CHECK(std::fabs(mc / mmse_params(cfg).e_ratio - 1.0) <= 0.005);
}

TEST_CASE("check_covariance_identities: quick run passes, including K > M") {
    CHECK(check_covariance_identities(ChannelDims(2, 2), 0.1, 20000, kSeed, 0.03).pass);
    CHECK(check_covariance_identities(ChannelDims(4, 2), 0.1, 20000, kSeed, 0.03).pass);
}

TEST_CASE("check_covariance_identities: means vanish as the noise blows up") {
    // F -> 0 when sigma2 -> inf, and the closed-form expectations shrink
    // with it; the relative comparison still holds.
    const CheckReport r = check_covariance_identities(ChannelDims(2, 2), 1e6, 5000, kSeed, 0.10);
    CHECK(r.pass);
}

TEST_CASE("simulate_qci_chain: quantile grid at a quick sample count") {
    const ChannelDims dims(2, 4);
    const double sigma2 = 0.1;
    const NoiseLevelDensity density(dims, sigma2);
    const QuantGrid grid = density.quantiles(4);
    const QciAllocation alloc = qci_waterfill(grid, dims.k, dims.k * (2.0 + 3.0));
    const CheckReport report = simulate_qci_chain(dims, sigma2, grid, alloc, 5000, kSeed);
    CHECK(report.pass);
}

TEST_CASE("check_matrix_inequalities: no violations, scalar case exact") {
    for (int k : {1, 2, 4}) {
        const CheckReport r = check_matrix_inequalities(k, 300, kSeed);
        CHECK(r.pass);
    }
    // diagonal matrices meet the log-det inequality with equality
    Eigen::MatrixXcd n_mat = Eigen::MatrixXcd::Zero(3, 3);
    n_mat(0, 0) = 0.5;
    n_mat(1, 1) = 2.0;
    n_mat(2, 2) = 7.0;
    double lhs = 0.0, rhs = 0.0;
    for (int i = 0; i < 3; ++i) {
        lhs += std::log1p(n_mat(i, i).real()) - std::log(n_mat(i, i).real());
        rhs += std::log1p(n_mat(i, i).real()) - std::log(n_mat(i, i).real());
    }
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-14));
}
