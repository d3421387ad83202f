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

#ifndef IBRELAY_QCI_HPP
#define IBRELAY_QCI_HPP

#include "ibrelay/bounds.hpp"
#include "ibrelay/spectra.hpp"

namespace ibrelay {

/// Thrown when the bottleneck budget does not cover the entropy of the
/// quantized per-subchannel noise levels (the CSI feedback cost).
struct InfeasibleBudget : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Budget split over the quantization levels of the channel-inversion
/// scheme: c_j = max(0, log2(level_snr_j / nu)) for the finite levels,
/// zero for the infinite one.
struct QciAllocation {
    double log2_nu = 0.0;
    double nu = 0.0;
    std::vector<double> c_bits;      // per level, J entries, last is 0
    std::vector<double> level_snrs;  // 1 / b_j, last is 0
    int active_levels = 0;           // levels with positive allocation
};

/// Water level and per-level budgets meeting
///   sum_j k * P_j * c_j = c_total_bits - k * H0
/// by the active-set sweep over levels in decreasing-SNR order. Valid for
/// non-uniform pmfs; zero-mass levels are skipped. Throws InfeasibleBudget
/// when the budget does not exceed the feedback cost k * H0.
QciAllocation qci_waterfill(const QuantGrid& grid, int k, double c_total_bits);

/// Rate of the channel-inversion scheme for a given allocation:
///   sum_j k * P_j * [log2(1 + snr_j) - log2(1 + snr_j 2^-c_j)]
/// in bits/complex dimension.
double qci_rate(const QuantGrid& grid, const QciAllocation& alloc, int k);

/// Composite scheme with quantile levels: builds the J-level quantile grid
/// of the noise density, funds it, and returns the resulting rate.
double qci_quantile_rate(const ChannelConfig& cfg, int j_levels, const NoiseLevelDensity& density);

/// Large-budget limit k * E[log2(1 + 1/a)] of the channel-inversion scheme,
/// plus the large-M / large-SNR limit, which is the budget itself.
struct QciLimits {
    double limit_large_c = 0.0;
    double limit_large_m_or_snr = 0.0;
};

QciLimits qci_limits(const ChannelConfig& cfg, const NoiseLevelDensity& density);

/// Convenience accessor for the large-budget limit alone.
double qci_limit_rate(const ChannelConfig& cfg, const NoiseLevelDensity& density);

/// Fading coefficient applied to one sub-channel when constructing the
/// forwarded representation: sqrt((1/level + 2^rate)/(1 + level) - 1/level).
/// `rate_bits` is the budget granted to that sub-channel.
double repr_fading(double level, double rate_bits);

}  // namespace ibrelay

#endif  // IBRELAY_QCI_HPP
