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

#ifndef IBRELAY_MATHCORE_HPP
#define IBRELAY_MATHCORE_HPP

#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace ibrelay {

/// Thrown when a quadrature routine cannot reach the requested tolerance.
/// Carries the last two refinement estimates for diagnosis.
struct QuadratureError : std::runtime_error {
    QuadratureError(const std::string& what, double last, double previous)
        : std::runtime_error(what), last_estimate(last), previous_estimate(previous) {}
    double last_estimate;
    double previous_estimate;
};

/// Thrown when a root bracket does not contain a sign change. Callers are
/// expected to widen the bracket and retry.
struct BracketingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Numerical integration strategy.
///
/// A gauss-laguerre rule with n nodes integrates exp(-x) * p(x) over
/// [0, inf) exactly for polynomials p of degree <= 2n-1. It is applied to a
/// general integrand f on [lower, inf) through the shift u = x - lower and
/// the combined weights w_i * exp(x_i), so f must decay at least
/// exponentially. The adaptive rule bisects finite intervals under a
/// Gauss-Kronrod 7/15 error estimate until the absolute tolerance is met.
struct QuadratureRule {
    enum class Kind { gauss_laguerre, adaptive_interval };

    Kind kind = Kind::adaptive_interval;
    std::vector<double> nodes;        // strictly increasing (gauss-laguerre)
    std::vector<double> weights;      // positive, same count as nodes
    std::vector<double> log_weights;  // log(weights), kept for stable shifts
    double abs_tol = 1e-10;
    int max_depth = 55;

    static QuadratureRule gauss_laguerre(int n);
    static QuadratureRule adaptive(double abs_tol = 1e-10);
};

/// Generalized Laguerre polynomial L_i^alpha(x) by the upward three-term
/// recurrence, which is stable for i >= 0, alpha >= 0, x >= 0.
double laguerre(int i, int alpha, double x);

/// log(Gamma(x)) for x > 0. Throws std::domain_error otherwise.
double log_gamma(double x);

/// Integrate f over [lower, upper].
///
/// gauss-laguerre requires upper == kInf; the adaptive rule requires a
/// finite interval. Throws QuadratureError when refinement stalls.
double integrate(const std::function<double(double)>& f, double lower, double upper,
                 const QuadratureRule& rule);

/// Root of a monotone f on [lo, hi] by bisection, to absolute tolerance
/// `tol` on the argument. f(lo) and f(hi) must bracket zero; otherwise a
/// BracketingError is thrown. Deterministic.
double bisect_monotone(const std::function<double(double)>& f, double lo, double hi,
                       double tol);

}  // namespace ibrelay

#endif  // IBRELAY_MATHCORE_HPP
