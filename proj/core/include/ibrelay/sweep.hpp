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

#ifndef IBRELAY_SWEEP_HPP
#define IBRELAY_SWEEP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ibrelay/spectra.hpp"

namespace ibrelay {

enum class SweepAxis { snr_db, capacity_bits, antennas_m };

/// One experiment: sweep a single parameter, evaluate the selected bounds
/// at every grid point. QCI cells whose quantization bits B do not fit the
/// budget (B >= C/K) are emitted as missing values, not errors.
struct SweepSpec {
    SweepAxis axis = SweepAxis::snr_db;
    std::vector<double> axis_values;  // non-empty, strictly increasing
    ChannelConfig fixed;              // the non-swept parameters
    bool with_ub = true;
    bool with_qci = true;
    bool with_mmse = true;
    std::vector<int> qci_bits = {4};  // each B runs a 2^B-level quantile grid
    bool with_limits = false;         // append the large-budget limit columns
    long mc_samples = 0;              // > 0 appends a Monte Carlo capacity column
    std::uint64_t seed = 0;

    void validate() const;
};

struct SweepRow {
    double axis_value = 0.0;
    std::optional<double> r_ub;
    std::vector<std::optional<double>> r_qci;  // one per spec.qci_bits entry
    std::optional<double> r_mmse;
    std::optional<double> ub_limit_c;    // capacity: where the upper bound saturates
    std::optional<double> qci_limit_c;   // large-budget limit of the QCI scheme
    std::optional<double> mmse_limit_c;  // large-budget limit of the MMSE scheme
    std::optional<double> capacity_mc;   // Monte Carlo capacity column
};

std::vector<SweepRow> run_sweep(const SweepSpec& spec);

/// Column headers in emission order.
std::vector<std::string> sweep_columns(const SweepSpec& spec);

/// CSV with one header row; 6 significant digits; "NA" for missing cells.
/// Output is byte-identical across reruns of the same spec and seed.
void emit_csv(const std::vector<SweepRow>& rows, const SweepSpec& spec, const std::string& path);

/// Single SVG line chart, one polyline per column, gaps at missing cells.
void emit_svg(const std::vector<SweepRow>& rows, const SweepSpec& spec, const std::string& path);

std::string render_csv(const std::vector<SweepRow>& rows, const SweepSpec& spec);
std::string render_svg(const std::vector<SweepRow>& rows, const SweepSpec& spec);

/// The three stock experiment presets reproduced by the tool:
/// rate versus SNR (K=M=2, C=40), versus budget (K=M=4, 40 dB), and
/// versus relay antennas (K=2, 40 dB, C=40).
SweepSpec preset_snr_sweep();
SweepSpec preset_capacity_sweep();
SweepSpec preset_antennas_sweep();

}  // namespace ibrelay

#endif  // IBRELAY_SWEEP_HPP
