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
//
// Monte Carlo brute-force layer. Everything the closed-form modules
// compute is re-derived here from sampled channel matrices, so a mistake
// in a density or an expectation shows up as a failed cross-check rather
// than a silently wrong curve.

#ifndef IBRELAY_ORACLE_HPP
#define IBRELAY_ORACLE_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "ibrelay/qci.hpp"
#include "ibrelay/spectra.hpp"

namespace ibrelay::oracle {

/// Seed used by the command line tool and the shipped test suites when
/// none is given. Fixed so every published number is reproducible.
inline constexpr std::uint64_t kDefaultSeed = 20260845;

/// One draw of the M x K channel matrix with i.i.d. CN(0,1) entries.
/// Reproducible: the matrix is a pure function of (seed, stream).
struct ChannelSample {
    Eigen::MatrixXcd h;
    std::uint64_t stream_id = 0;
};

ChannelSample sample_channel(ChannelDims dims, std::uint64_t seed, std::uint64_t stream);

/// Histogram over equal-model-mass bins. `edges` are the interior bin
/// edges (bin count = edges.size() + 1); masses sum to 1.
struct EmpiricalHistogram {
    std::vector<double> edges;
    std::vector<double> masses;
    long n_samples = 0;
};

/// One named scalar check inside a report.
struct CheckItem {
    std::string name;
    double value = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct CheckReport {
    std::string name;
    bool pass = true;
    std::vector<CheckItem> items;

    void add(const std::string& item, double value, double tolerance, bool ok);
    /// Convenience: |value| <= tolerance.
    void add_abs(const std::string& item, double value, double tolerance);
    std::string to_text() const;
};

/// Pools the T positive eigenvalues of H H^H over n samples and compares
/// the histogram on 50 equal-model-mass bins against the closed-form
/// density: per-bin relative error <= per_bin_tol, plus a chi-square
/// statistic and the mean (which must approach max(K, M)).
CheckReport empirical_eig_check(ChannelDims dims, long n, std::uint64_t seed,
                                double per_bin_tol = 0.05);

/// Monte Carlo mean of log2 det(I + rho * H H^H) in bits/complex dimension.
double empirical_capacity(const ChannelConfig& cfg, long n, std::uint64_t seed);

struct NoiseLevelCheck {
    CheckReport report;
    EmpiricalHistogram histogram;  // binned under the fitted convention
    bool complex_gamma_fits = false;
    bool half_dof_fits = false;
};

/// Pools the K diagonal entries of sigma^2 (H^H H)^{-1} and tests both
/// degrees-of-freedom conventions of the closed-form level density. The
/// overall report passes when exactly one convention fits. Near-singular
/// samples (condition > 1e12) are redrawn and counted.
NoiseLevelCheck empirical_noise_levels(ChannelDims dims, double sigma2, long n,
                                       std::uint64_t seed, double per_bin_tol = 0.05);

/// Forms F = (H H^H + sigma^2 I)^{-1} H per sample and checks that the
/// means of F^H H, F^H H H^H F, F^H F and the estimate covariance are
/// (T/K) E[g(lambda)] I_K for the matching g: diagonals within
/// `diag_rel_tol`, off-diagonal magnitudes within 3/sqrt(n).
CheckReport check_covariance_identities(ChannelDims dims, double sigma2, long n,
                                        std::uint64_t seed, double diag_rel_tol = 0.01);

/// Simulates the channel-inversion chain: pseudo-inverse estimate, noise
/// levels snapped up to the grid by adding artificial noise, then the
/// faded-plus-noise representation. Checks the level pmf against
/// grid_pmf, non-negativity of the added noise, the conditional noise
/// covariance, and the per-level representation variance predicted for
/// the Gaussian surrogate.
CheckReport simulate_qci_chain(ChannelDims dims, double sigma2, const QuantGrid& grid,
                               const QciAllocation& alloc, long n, std::uint64_t seed);

/// Property test on random positive-definite matrices: the diagonal part
/// N1 of N satisfies
///   log det(I+N) - log det(N) >= log det(I+N1) - log det(N1),
///   tr(N1^{-1}) <= tr(N^{-1}),
/// and the sorted diagonal is majorized by the sorted eigenvalues.
CheckReport check_matrix_inequalities(int k, int trials, std::uint64_t seed);

enum class SuiteLevel { quick, full };

struct SuiteReport {
    std::vector<CheckReport> checks;
    bool pass = true;
    std::string to_text() const;
    /// Machine-readable records: check,item,value,tolerance,pass
    std::string to_csv() const;
};

/// Runs the whole cross-validation battery. quick uses 1e4 samples per
/// check (seconds), full uses 1e5 (minutes).
SuiteReport run_suite(SuiteLevel level, std::uint64_t seed);

}  // namespace ibrelay::oracle

#endif  // IBRELAY_ORACLE_HPP
