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

#include "ibrelay/spectra.hpp"

#include <algorithm>
#include <cmath>

namespace ibrelay {

namespace {

double gamma_density(double g, double shape) {
    if (g <= 0.0) return 0.0;
    return std::exp((shape - 1.0) * std::log(g) - g - log_gamma(shape));
}

double gamma_upper_cut(double shape) {
    return shape + 20.0 * std::sqrt(shape) + 80.0;
}

}  // namespace

EigDensity::EigDensity(ChannelDims dims) : dims_(dims) {
    const int t = dims_.t();
    const int d = dims_.s() - t;
    log_coeff_.resize(t);
    for (int i = 0; i < t; ++i)
        log_coeff_[i] = log_gamma(i + 1.0) - log_gamma(i + d + 1.0);
}

double EigDensity::pdf(double lambda) const {
    if (lambda < 0.0) throw std::domain_error("EigDensity::pdf: lambda must be >= 0");
    const int t = dims_.t();
    const int d = dims_.s() - t;
    if (lambda == 0.0) return d > 0 ? 0.0 : 1.0;  // at 0 every L_i^0 is 1 and the coeffs are 1
    const double log_lambda = std::log(lambda);
    double sum = 0.0;
    for (int i = 0; i < t; ++i) {
        double li = laguerre(i, d, lambda);
        if (li == 0.0) continue;
        sum += std::exp(log_coeff_[i] + 2.0 * std::log(std::fabs(li)) + d * log_lambda - lambda);
    }
    return sum / t;
}

double EigDensity::upper_cut() const {
    const double s = dims_.s();
    const double t = dims_.t();
    const double edge = s + t + 2.0 * std::sqrt(s * t);
    return edge + 20.0 * std::sqrt(s) + 80.0;
}

double EigDensity::expectation(const std::function<double(double)>& g) const {
    return expectation_above(0.0, g);
}

double EigDensity::expectation_above(double lower, const std::function<double(double)>& g) const {
    if (lower < 0.0) lower = 0.0;
    auto integrand = [&](double lam) { return g(lam) * pdf(lam); };
    // Adaptive over the support. The Gauss-Laguerre rule is exact for the
    // polynomial moments but converges poorly once g carries structure at
    // the noise scale (a log branch point at -sigma2), so it is not used
    // for expectations.
    const double hi = std::max(upper_cut(), lower + 80.0);
    return integrate(integrand, lower, hi, QuadratureRule::adaptive(1e-11));
}

NoiseLevelDensity::NoiseLevelDensity(ChannelDims dims, double sigma2, DofConvention convention)
    : dims_(dims), sigma2_(sigma2), convention_(convention) {
    if (dims.k > dims.m)
        throw UnsupportedConfig("NoiseLevelDensity: channel inversion requires K <= M");
    if (!(sigma2 > 0.0)) throw std::invalid_argument("NoiseLevelDensity: sigma2 must be positive");
    const double dof = dims.m - dims.k + 1.0;
    if (convention == DofConvention::complex_gamma) {
        shape_ = dof;
        scale_ = 1.0;
    } else {
        shape_ = 0.5 * dof;
        scale_ = 2.0;
    }
}

double NoiseLevelDensity::pdf(double a) const {
    if (!(a > 0.0)) throw std::domain_error("NoiseLevelDensity::pdf: level must be positive");
    // a = sigma2 / (scale * g), g ~ Gamma(shape, 1); change of variables.
    const double g = sigma2_ / (scale_ * a);
    return gamma_density(g, shape_) * g / a;
}

double NoiseLevelDensity::cdf(double a) const {
    if (!(a > 0.0)) return 0.0;
    const double x = sigma2_ / (scale_ * a);
    const double hi = std::max(gamma_upper_cut(shape_), x + 200.0);
    if (x >= hi) return 0.0;
    auto f = [&](double g) { return gamma_density(g, shape_); };
    double p = integrate(f, x, hi, QuadratureRule::adaptive(1e-12));
    return std::clamp(p, 0.0, 1.0);
}

double NoiseLevelDensity::expectation(const std::function<double(double)>& h) const {
    const QuadratureRule rule = QuadratureRule::adaptive(1e-11);
    if (shape_ >= 1.0) {
        auto f = [&](double g) { return h(sigma2_ / (scale_ * g)) * gamma_density(g, shape_); };
        return integrate(f, 0.0, gamma_upper_cut(shape_), rule);
    }
    // shape < 1: the rate variable's density has a power singularity at 0;
    // u = sqrt(g) removes it.
    auto f = [&](double u) {
        const double g = u * u;
        return h(sigma2_ / (scale_ * g)) * gamma_density(g, shape_) * 2.0 * u;
    };
    return integrate(f, 0.0, std::sqrt(gamma_upper_cut(shape_)), rule);
}

QuantGrid NoiseLevelDensity::quantiles(int j_levels) const {
    if (j_levels < 2) throw std::invalid_argument("quantiles: need at least 2 levels");
    std::vector<double> points(j_levels - 1);
    double lo = std::log(sigma2_ * 1e-9);
    double hi = std::log(sigma2_ * 1e6);
    for (int i = 1; i < j_levels; ++i) {
        const double target = static_cast<double>(i) / j_levels;
        auto f = [&](double u) { return cdf(std::exp(u)) - target; };
        for (int attempt = 0;; ++attempt) {
            try {
                points[i - 1] = std::exp(bisect_monotone(f, lo, hi, 1e-12));
                break;
            } catch (const BracketingError&) {
                if (attempt >= 4) throw;
                lo -= 20.0;  // widen geometrically in the level itself
                hi += 20.0;
            }
        }
    }
    return grid_pmf(points, *this);
}

QuantGrid grid_pmf(std::span<const double> points, const NoiseLevelDensity& density) {
    QuantGrid grid;
    grid.points.assign(points.begin(), points.end());
    double prev_point = 0.0;
    for (double b : grid.points) {
        if (!(b > 0.0) || !std::isfinite(b))
            throw std::invalid_argument("grid_pmf: points must be positive and finite");
        if (b < prev_point) throw std::invalid_argument("grid_pmf: points must be non-decreasing");
        prev_point = b;
    }
    const std::size_t j = grid.points.size() + 1;
    grid.pmf.resize(j);
    double prev_cdf = 0.0;
    for (std::size_t i = 0; i + 1 < j; ++i) {
        double c = density.cdf(grid.points[i]);
        grid.pmf[i] = std::max(0.0, c - prev_cdf);
        prev_cdf = c;
    }
    grid.pmf[j - 1] = std::max(0.0, 1.0 - prev_cdf);
    grid.entropy_bits = 0.0;
    for (double p : grid.pmf)
        if (p > 0.0) grid.entropy_bits -= p * std::log2(p);
    return grid;
}

}  // namespace ibrelay
