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

#ifndef IBRELAY_MMSE_HPP
#define IBRELAY_MMSE_HPP

#include "ibrelay/spectra.hpp"

namespace ibrelay {

/// Parameters of the compressed-MMSE-estimate scheme: the mean shrinkage
/// ratio E[lambda/(lambda+sigma^2)] and the representation noise power D
/// chosen so the compression rate meets the budget exactly.
struct MmseParams {
    double e_ratio = 0.0;  // E[lambda / (lambda + sigma^2)], in (0, 1)
    double d_noise = 0.0;  // (T/K) * e_ratio / (2^(C/K) - 1)
};

MmseParams mmse_params(const ChannelConfig& cfg);

/// Rate of the MMSE scheme with clamp diagnostics. The bound can go
/// negative at very low SNR, where it is vacuous; `rate_bits` is then 0
/// and `clamped` is set, with the raw value preserved.
struct MmseRateResult {
    double rate_bits = 0.0;
    double raw_bits = 0.0;
    bool clamped = false;
};

MmseRateResult mmse_rate_detail(const ChannelConfig& cfg);

/// Rate of the MMSE scheme in bits/complex dimension (clamped at 0).
double mmse_rate(const ChannelConfig& cfg);

/// Asymptotics: the budget C for large M (or large SNR when K <= M), and
/// the large-budget constant
///   K E[log2(lambda/(lambda+sigma^2))] - K log2(e_ratio - e_ratio^2).
struct MmseLimits {
    double limit_large_m_or_snr = 0.0;
    double limit_large_c = 0.0;
};

MmseLimits mmse_limits(const ChannelConfig& cfg);

}  // namespace ibrelay

#endif  // IBRELAY_MMSE_HPP
