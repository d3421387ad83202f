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

#include "ibrelay/mathcore.hpp"

#include <cmath>
#include <cstdio>

namespace ibrelay {

double laguerre(int i, int alpha, double x) {
    if (i < 0 || alpha < 0) throw std::domain_error("laguerre: order and alpha must be >= 0");
    if (x < 0.0) throw std::domain_error("laguerre: argument must be >= 0");
    if (i == 0) return 1.0;
    double prev = 1.0;
    double cur = 1.0 + alpha - x;
    for (int n = 1; n < i; ++n) {
        double next = ((2.0 * n + 1.0 + alpha - x) * cur - (n + alpha) * prev) / (n + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

double log_gamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("log_gamma: argument must be positive");
    return std::lgamma(x);
}

namespace {

// Gauss-Kronrod 7/15 pair on [-1, 1]; positive abscissae half.
constexpr double kGk15Nodes[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691, 0.7415311855993944,
    0.5860872354676911, 0.4058451513773972, 0.2077849550078985, 0.0};
constexpr double kGk15Weights[8] = {
    0.0229353220105292, 0.0630920926299786, 0.1047900103222502, 0.1406532597155259,
    0.1690047266392679, 0.1903505780647854, 0.2044329400752989, 0.2094821410847278};
constexpr double kGauss7Weights[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189, 0.4179591836734694};

struct Gk15Result {
    double kronrod;
    double gauss;
};

Gk15Result gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fc = f(c);
    double kron = kGk15Weights[7] * fc;
    double gauss = kGauss7Weights[3] * fc;
    for (int j = 0; j < 7; ++j) {
        double fa = f(c - h * kGk15Nodes[j]);
        double fb = f(c + h * kGk15Nodes[j]);
        kron += kGk15Weights[j] * (fa + fb);
        if (j % 2 == 1) gauss += kGauss7Weights[j / 2] * (fa + fb);
    }
    return {kron * h, gauss * h};
}

double adaptive_gk(const std::function<double(double)>& f, double a, double b, double tol,
                   double scale, int depth, int max_depth) {
    Gk15Result r = gk15(f, a, b);
    double err = std::fabs(r.kronrod - r.gauss);
    // Accept on the local budget, or once the estimate is at the roundoff
    // floor of the whole integral.
    if (err <= tol || err <= 1e-15 * scale || err <= 1e-14 * std::fabs(r.kronrod))
        return r.kronrod;
    if (depth >= max_depth) {
        char msg[160];
        std::snprintf(msg, sizeof(msg),
                      "integrate: no convergence on [%.6g, %.6g], error estimate %.3g", a, b, err);
        throw QuadratureError(msg, r.kronrod, r.gauss);
    }
    double mid = 0.5 * (a + b);
    return adaptive_gk(f, a, mid, 0.5 * tol, scale, depth + 1, max_depth) +
           adaptive_gk(f, mid, b, 0.5 * tol, scale, depth + 1, max_depth);
}

}  // namespace

QuadratureRule QuadratureRule::gauss_laguerre(int n) {
    if (n < 1 || n > 100) throw std::domain_error("gauss_laguerre: node count must be in [1, 100]");
    QuadratureRule rule;
    rule.kind = Kind::gauss_laguerre;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    rule.log_weights.resize(n);
    // Newton iteration on the roots of L_n, classic initial guesses.
    double z = 0.0;
    for (int i = 0; i < n; ++i) {
        if (i == 0) {
            z = 3.0 / (1.0 + 2.4 * n);
        } else if (i == 1) {
            z += 15.0 / (1.0 + 2.5 * n);
        } else {
            double ai = i - 1;
            z += ((1.0 + 2.55 * ai) / (1.9 * ai)) * (z - rule.nodes[i - 2]);
        }
        double pp = 0.0;
        double p2 = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = 1.0;
            p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0 - z) * p2 - j * p3) / (j + 1.0);
            }
            pp = n * (p1 - p2) / z;  // dL_n/dx at z
            double z1 = z;
            z = z1 - p1 / pp;
            if (std::fabs(z - z1) <= 1e-15 * std::fabs(z)) break;
        }
        rule.nodes[i] = z;
        rule.weights[i] = -1.0 / (pp * n * p2);
        rule.log_weights[i] = std::log(rule.weights[i]);
    }
    return rule;
}

QuadratureRule QuadratureRule::adaptive(double abs_tol) {
    QuadratureRule rule;
    rule.kind = Kind::adaptive_interval;
    rule.abs_tol = abs_tol;
    return rule;
}

double integrate(const std::function<double(double)>& f, double lower, double upper,
                 const QuadratureRule& rule) {
    if (rule.kind == QuadratureRule::Kind::gauss_laguerre) {
        if (upper != kInf)
            throw std::invalid_argument("integrate: gauss-laguerre rule needs an infinite upper limit");
        double sum = 0.0;
        const std::size_t n = rule.nodes.size();
        for (std::size_t i = n; i-- > 0;) {  // small weights first
            double x = rule.nodes[i];
            sum += std::exp(rule.log_weights[i] + x) * f(lower + x);
        }
        return sum;
    }
    if (!std::isfinite(lower) || !std::isfinite(upper))
        throw std::invalid_argument("integrate: adaptive rule needs a finite interval");
    if (upper <= lower) return 0.0;
    const double scale = std::max(std::fabs(gk15(f, lower, upper).kronrod), rule.abs_tol);
    return adaptive_gk(f, lower, upper, rule.abs_tol, scale, 0, rule.max_depth);
}

double bisect_monotone(const std::function<double(double)>& f, double lo, double hi,
                       double tol) {
    if (!(hi > lo)) throw std::invalid_argument("bisect_monotone: empty bracket");
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw BracketingError("bisect_monotone: no sign change on bracket");
    const bool increasing = fhi > 0.0;
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // bracket at floating point resolution
        double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == increasing)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace ibrelay
