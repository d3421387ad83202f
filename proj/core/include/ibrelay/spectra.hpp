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

#ifndef IBRELAY_SPECTRA_HPP
#define IBRELAY_SPECTRA_HPP

#include <cmath>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "ibrelay/mathcore.hpp"

namespace ibrelay {

/// Thrown for channel shapes a scheme cannot serve (e.g. channel inversion
/// with fewer relay antennas than inputs).
struct UnsupportedConfig : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Antenna counts of the source-relay channel: K inputs, M relay antennas.
struct ChannelDims {
    int k = 1;
    int m = 1;

    ChannelDims() = default;
    ChannelDims(int k_, int m_) : k(k_), m(m_) {
        if (k < 1 || m < 1) throw std::invalid_argument("ChannelDims: antenna counts must be >= 1");
    }
    int t() const { return k < m ? k : m; }  // number of positive channel eigenvalues
    int s() const { return k > m ? k : m; }
};

/// Channel dimensions plus noise power and the bottleneck budget in
/// bits/complex dimension. snr() is 1/sigma2.
struct ChannelConfig {
    ChannelDims dims;
    double sigma2 = 1.0;
    double capacity_bits = 0.0;

    ChannelConfig() = default;
    ChannelConfig(ChannelDims d, double sigma2_, double capacity_bits_)
        : dims(d), sigma2(sigma2_), capacity_bits(capacity_bits_) {
        if (!(sigma2 > 0.0)) throw std::invalid_argument("ChannelConfig: sigma2 must be positive");
        if (capacity_bits < 0.0)
            throw std::invalid_argument("ChannelConfig: capacity must be non-negative");
    }
    static ChannelConfig from_snr_db(ChannelDims d, double snr_db, double capacity_bits) {
        return ChannelConfig(d, std::pow(10.0, -snr_db / 10.0), capacity_bits);
    }
    double snr() const { return 1.0 / sigma2; }
    double snr_db() const { return 10.0 * std::log10(snr()); }
};

/// Ordered quantization grid b_1 <= ... <= b_{J-1} with an implicit last
/// point b_J = +inf, its level probabilities and their entropy.
struct QuantGrid {
    std::vector<double> points;  // J-1 finite points; the J-th level is +inf
    std::vector<double> pmf;     // J probabilities, sums to 1
    double entropy_bits = 0.0;

    int levels() const { return static_cast<int>(pmf.size()); }
};

/// Marginal density of one unordered positive eigenvalue of H H^H for an
/// M x K matrix H with i.i.d. CN(0,1) entries. Depends on the dims only
/// through (T, S) = (min, max), so it is symmetric in (K, M). Evaluation is
/// done term-by-term in log space so large S stays finite.
class EigDensity {
  public:
    explicit EigDensity(ChannelDims dims);

    ChannelDims dims() const { return dims_; }

    double pdf(double lambda) const;

    /// E[g(lambda)], integrated adaptively over the density's support.
    double expectation(const std::function<double(double)>& g) const;

    /// Integral of g(lambda) f(lambda) over [lower, inf). The caller is
    /// responsible for choosing `lower` at any kink of g.
    double expectation_above(double lower, const std::function<double(double)>& g) const;

    /// Point beyond which the remaining probability mass is negligible
    /// (< 1e-14); used to truncate adaptive integrals.
    double upper_cut() const;

  private:
    ChannelDims dims_;
    std::vector<double> log_coeff_;  // log(i! / (i+S-T)!) per series term
};

/// Degrees-of-freedom convention for the channel-inversion noise level.
/// `paper_half_dof` treats 1/eta as chi-squared with M-K+1 degrees of
/// freedom; `complex_gamma` treats it as Gamma(M-K+1, 1), the moment
/// structure of a complex Wishart inverse. A Monte Carlo arbitration
/// (oracle module) selects the default.
enum class DofConvention { paper_half_dof, complex_gamma };

constexpr DofConvention kDefaultDofConvention = DofConvention::complex_gamma;

/// Marginal density of one diagonal entry of sigma^2 (H^H H)^{-1}, the
/// per-subchannel noise level after channel inversion. Requires K <= M.
class NoiseLevelDensity {
  public:
    NoiseLevelDensity(ChannelDims dims, double sigma2,
                      DofConvention convention = kDefaultDofConvention);

    ChannelDims dims() const { return dims_; }
    double sigma2() const { return sigma2_; }
    DofConvention convention() const { return convention_; }

    double pdf(double a) const;

    /// P(noise level <= a), by numerical integration of the rate-variable
    /// density (exact substitution u = sigma^2 / a).
    double cdf(double a) const;

    /// E[h(a)] over the noise-level distribution.
    double expectation(const std::function<double(double)>& h) const;

    /// Quantile grid with J levels: CDF(b_i) = i/J for i < J and an
    /// implicit b_J = +inf, giving the uniform pmf 1/J.
    QuantGrid quantiles(int j_levels) const;

  private:
    // In both conventions a = sigma2 / (scale * g) with g ~ Gamma(shape, 1).
    double shape_ = 1.0;
    double scale_ = 1.0;
    ChannelDims dims_;
    double sigma2_;
    DofConvention convention_;
};

/// Level probabilities of a quantization grid under a noise-level density:
/// P_j = CDF(b_j) - CDF(b_{j-1}) with b_0 = 0 and b_J = +inf. Duplicate
/// points yield zero-mass levels; entropy uses 0 log 0 = 0.
QuantGrid grid_pmf(std::span<const double> points, const NoiseLevelDensity& density);

}  // namespace ibrelay

#endif  // IBRELAY_SPECTRA_HPP
