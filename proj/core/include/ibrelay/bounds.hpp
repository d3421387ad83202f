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

#ifndef IBRELAY_BOUNDS_HPP
#define IBRELAY_BOUNDS_HPP

#include "ibrelay/spectra.hpp"

namespace ibrelay {

/// Water-filling allocation of the bottleneck budget over the channel
/// eigenvalue distribution. The water level nu is kept in log2 form so
/// budgets large enough to underflow exp2 stay representable.
struct WaterfillSolution {
    double log2_nu = 0.0;
    double nu = 0.0;          // exp2(log2_nu); may underflow to 0 for huge budgets
    double rate_bits = 0.0;
    double spent_bits = 0.0;  // compression budget consumed (= C when feasible)
    bool degenerate = false;  // C == 0: no representation is forwarded
};

/// Optimal rate of a scalar Gaussian channel with effective SNR `snr_eff`
/// under a compression budget of `c_bits`:
/// log2(1 + snr) - log2(1 + snr * 2^-c).
double scalar_ib_rate(double snr_eff, double c_bits);

/// Water level nu solving
///   integral over lambda > nu/rho of log2(rho*lambda/nu) f(lambda) = C/T,
/// found by bisection in log2(nu); the left side is strictly decreasing.
WaterfillSolution solve_water_level(const ChannelConfig& cfg);

/// Informed-receiver bound
///   T * integral over lambda > nu/rho of [log2(1+rho*lambda) - log2(1+nu)] f(lambda),
/// in bits/complex dimension.
double upper_bound(const ChannelConfig& cfg);

/// Ergodic capacity of the source-relay channel,
/// T * E[log2(1 + rho*lambda)], in bits/complex dimension.
double capacity(const ChannelConfig& cfg);

/// Asymptotic values of the informed-receiver bound: it reaches the budget
/// C as M or rho grow, and the channel capacity as C grows.
struct UbLimits {
    double limit_large_m = 0.0;
    double limit_large_snr = 0.0;
    double limit_large_c = 0.0;
};

UbLimits ub_limits(const ChannelConfig& cfg);

}  // namespace ibrelay

#endif  // IBRELAY_BOUNDS_HPP
