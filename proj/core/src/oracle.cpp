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

#include "ibrelay/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "ibrelay/rng.hpp"

namespace ibrelay::oracle {

namespace {

constexpr double kInvLn2 = 1.4426950408889634;
constexpr double kCondLimit = 1e12;
constexpr double kMaxResampleFraction = 1e-3;
constexpr int kBins = 50;

// Stream salts keep the checks statistically independent of each other
// while staying a pure function of (seed, check, sample index).
constexpr std::uint64_t salt(std::uint64_t check, std::uint64_t index) {
    return (check << 48) | index;
}

Eigen::MatrixXcd draw_h(ChannelDims dims, PhiloxRng& rng) {
    Eigen::MatrixXcd h(dims.m, dims.k);
    for (int c = 0; c < dims.k; ++c)
        for (int r = 0; r < dims.m; ++r) h(r, c) = rng.gaussian();
    return h;
}

// Positive eigenvalues of H H^H, computed on the smaller Gram matrix.
Eigen::VectorXd gram_eigenvalues(const Eigen::MatrixXcd& h) {
    Eigen::MatrixXcd g;
    if (h.cols() <= h.rows())
        g = h.adjoint() * h;
    else
        g = h * h.adjoint();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(g, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) return Eigen::VectorXd();
    return es.eigenvalues();
}

// Interior edges of `bins` equal-model-mass bins for the eigenvalue
// density, from a dense cumulative table.
std::vector<double> eig_quantile_edges(const EigDensity& density, int bins) {
    const double hi = density.upper_cut();
    const int grid_n = 1 << 16;
    const double step = hi / grid_n;
    std::vector<double> cum(grid_n + 1, 0.0);
    double prev = density.pdf(0.0);
    for (int i = 1; i <= grid_n; ++i) {
        const double cur = density.pdf(i * step);
        cum[i] = cum[i - 1] + 0.5 * (prev + cur) * step;
        prev = cur;
    }
    const double total = cum[grid_n];
    std::vector<double> edges(bins - 1);
    int pos = 1;
    for (int b = 1; b < bins; ++b) {
        const double target = total * b / bins;
        while (pos < grid_n && cum[pos] < target) ++pos;
        const double frac = (target - cum[pos - 1]) / std::max(cum[pos] - cum[pos - 1], 1e-300);
        edges[b - 1] = (pos - 1 + frac) * step;
    }
    return edges;
}

EmpiricalHistogram make_histogram(const std::vector<double>& edges,
                                  const std::vector<double>& values) {
    EmpiricalHistogram hist;
    hist.edges = edges;
    hist.masses.assign(edges.size() + 1, 0.0);
    hist.n_samples = static_cast<long>(values.size());
    for (double v : values) {
        const std::size_t bin =
            std::upper_bound(edges.begin(), edges.end(), v) - edges.begin();
        hist.masses[bin] += 1.0;
    }
    for (double& m : hist.masses) m /= std::max<long>(hist.n_samples, 1);
    return hist;
}

double max_bin_error(const EmpiricalHistogram& hist) {
    const double expected = 1.0 / hist.masses.size();
    double worst = 0.0;
    for (double m : hist.masses) worst = std::max(worst, std::fabs(m - expected) / expected);
    return worst;
}

double chi_square(const EmpiricalHistogram& hist) {
    const double expected = static_cast<double>(hist.n_samples) / hist.masses.size();
    double chi2 = 0.0;
    for (double m : hist.masses) {
        const double count = m * hist.n_samples;
        chi2 += (count - expected) * (count - expected) / expected;
    }
    return chi2;
}

// Expectation with an adaptive split at sigma2, matching how the
// closed-form modules treat integrands that turn over at the noise scale.
double split_expectation(const EigDensity& density, double sigma2,
                         const std::function<double(double)>& g) {
    auto f = [&](double lam) { return g(lam) * density.pdf(lam); };
    const double hi = density.upper_cut();
    const double split = std::clamp(sigma2, hi * 1e-12, 0.5 * hi);
    const QuadratureRule rule = QuadratureRule::adaptive(5e-12);
    return integrate(f, 0.0, split, rule) + integrate(f, split, hi, rule);
}

}  // namespace

void CheckReport::add(const std::string& item, double value, double tolerance, bool ok) {
    items.push_back({item, value, tolerance, ok});
    pass = pass && ok;
}

void CheckReport::add_abs(const std::string& item, double value, double tolerance) {
    add(item, value, tolerance, std::fabs(value) <= tolerance);
}

std::string CheckReport::to_text() const {
    std::string out = "== " + name + " ==\n";
    char line[256];
    for (const auto& it : items) {
        std::snprintf(line, sizeof(line), "  [%s] %s: value=%.6g tol=%.6g\n",
                      it.pass ? "PASS" : "FAIL", it.name.c_str(), it.value, it.tolerance);
        out += line;
    }
    return out;
}

ChannelSample sample_channel(ChannelDims dims, std::uint64_t seed, std::uint64_t stream) {
    PhiloxRng rng(seed, stream);
    return {draw_h(dims, rng), stream};
}

CheckReport empirical_eig_check(ChannelDims dims, long n, std::uint64_t seed,
                                double per_bin_tol) {
    if (n < 1) throw std::invalid_argument("empirical_eig_check: n must be positive");
    const EigDensity density(dims);
    const std::vector<double> edges = eig_quantile_edges(density, kBins);

    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(n) * dims.t());
    long resamples = 0;
    for (long i = 0; i < n; ++i) {
        PhiloxRng rng(seed, salt(1, i));
        Eigen::VectorXd eig = gram_eigenvalues(draw_h(dims, rng));
        while (eig.size() == 0 && resamples < n) {  // decomposition failure: redraw
            ++resamples;
            eig = gram_eigenvalues(draw_h(dims, rng));
        }
        for (int t = 0; t < eig.size(); ++t) values.push_back(eig[t]);
    }

    const EmpiricalHistogram hist = make_histogram(edges, values);
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= values.size();

    CheckReport report;
    char name[96];
    std::snprintf(name, sizeof(name), "eigenvalue density vs MC (K=%d, M=%d, n=%ld)", dims.k,
                  dims.m, n);
    report.name = name;
    report.add("max per-bin relative error", max_bin_error(hist), per_bin_tol,
               max_bin_error(hist) <= per_bin_tol);
    const double chi2 = chi_square(hist);
    const double chi2_tol = (kBins - 1) + 6.0 * std::sqrt(2.0 * (kBins - 1));
    report.add("chi-square (49 dof)", chi2, chi2_tol, chi2 <= chi2_tol);
    report.add_abs("mean relative error vs S", mean / dims.s() - 1.0, 0.01);
    report.add("resample fraction", static_cast<double>(resamples) / n, kMaxResampleFraction,
               resamples <= kMaxResampleFraction * n);
    return report;
}

double empirical_capacity(const ChannelConfig& cfg, long n, std::uint64_t seed) {
    const double rho = cfg.snr();
    double sum = 0.0;
    for (long i = 0; i < n; ++i) {
        PhiloxRng rng(seed, salt(2, i));
        Eigen::VectorXd eig = gram_eigenvalues(draw_h(cfg.dims, rng));
        double bits = 0.0;
        for (int t = 0; t < eig.size(); ++t) bits += std::log1p(rho * eig[t]) * kInvLn2;
        sum += bits;
    }
    return sum / n;
}

NoiseLevelCheck empirical_noise_levels(ChannelDims dims, double sigma2, long n,
                                       std::uint64_t seed, double per_bin_tol) {
    if (dims.k > dims.m)
        throw UnsupportedConfig("empirical_noise_levels: requires K <= M");
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(n) * dims.k);
    long resamples = 0;
    for (long i = 0; i < n; ++i) {
        PhiloxRng rng(seed, salt(3, i));
        Eigen::MatrixXcd g;
        for (;;) {
            g = [&] {
                Eigen::MatrixXcd h = draw_h(dims, rng);
                return Eigen::MatrixXcd(h.adjoint() * h);
            }();
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(g, Eigen::EigenvaluesOnly);
            if (es.info() == Eigen::Success &&
                es.eigenvalues()(dims.k - 1) <= kCondLimit * es.eigenvalues()(0))
                break;
            if (++resamples > kMaxResampleFraction * n + 16) break;  // give up, let the item fail
        }
        const Eigen::MatrixXcd ginv = g.inverse();
        for (int k = 0; k < dims.k; ++k) values.push_back(sigma2 * ginv(k, k).real());
    }

    NoiseLevelCheck result;
    char name[96];
    std::snprintf(name, sizeof(name), "noise-level density vs MC (K=%d, M=%d, n=%ld)", dims.k,
                  dims.m, n);
    result.report.name = name;

    double err[2] = {0.0, 0.0};
    const DofConvention conventions[2] = {DofConvention::complex_gamma,
                                          DofConvention::paper_half_dof};
    for (int c = 0; c < 2; ++c) {
        const NoiseLevelDensity density(dims, sigma2, conventions[c]);
        const std::vector<double> edges = density.quantiles(kBins).points;
        const EmpiricalHistogram hist = make_histogram(edges, values);
        err[c] = max_bin_error(hist);
        if (c == 0) result.histogram = hist;
    }
    result.complex_gamma_fits = err[0] <= per_bin_tol;
    result.half_dof_fits = err[1] <= per_bin_tol;

    result.report.add("complex-gamma max per-bin error", err[0], per_bin_tol,
                      result.complex_gamma_fits);
    result.report.add("half-dof convention rejected (max per-bin error)", err[1], per_bin_tol,
                      !result.half_dof_fits);
    result.report.add("exactly one convention fits",
                      (result.complex_gamma_fits ? 1.0 : 0.0) + (result.half_dof_fits ? 1.0 : 0.0),
                      1.0, result.complex_gamma_fits != result.half_dof_fits);
    result.report.add("resample fraction", static_cast<double>(resamples) / n,
                      kMaxResampleFraction, resamples <= kMaxResampleFraction * n);
    return result;
}

CheckReport check_covariance_identities(ChannelDims dims, double sigma2, long n,
                                        std::uint64_t seed, double diag_rel_tol) {
    const int k = dims.k;
    const double t_over_k = static_cast<double>(dims.t()) / k;
    Eigen::MatrixXcd mean_fh = Eigen::MatrixXcd::Zero(k, k);
    Eigen::MatrixXcd mean_fhhf = Eigen::MatrixXcd::Zero(k, k);
    Eigen::MatrixXcd mean_ff = Eigen::MatrixXcd::Zero(k, k);
    const Eigen::MatrixXcd eye_m = Eigen::MatrixXcd::Identity(dims.m, dims.m);
    for (long i = 0; i < n; ++i) {
        PhiloxRng rng(seed, salt(4, i));
        const Eigen::MatrixXcd h = draw_h(dims, rng);
        const Eigen::MatrixXcd w = h * h.adjoint() + sigma2 * eye_m;
        const Eigen::MatrixXcd f = w.llt().solve(h);
        const Eigen::MatrixXcd fh = f.adjoint() * h;
        mean_fh += fh;
        mean_fhhf += fh * fh.adjoint();
        mean_ff += f.adjoint() * f;
    }
    mean_fh /= static_cast<double>(n);
    mean_fhhf /= static_cast<double>(n);
    mean_ff /= static_cast<double>(n);

    const EigDensity density(dims);
    const double e1 = split_expectation(density, sigma2,
                                        [&](double lam) { return lam / (lam + sigma2); });
    const double e2 = split_expectation(density, sigma2, [&](double lam) {
        const double r = lam / (lam + sigma2);
        return r * r;
    });
    const double e3 = split_expectation(density, sigma2, [&](double lam) {
        return lam / ((lam + sigma2) * (lam + sigma2));
    });

    CheckReport report;
    char name[96];
    std::snprintf(name, sizeof(name), "estimator covariance identities (K=%d, M=%d, n=%ld)",
                  dims.k, dims.m, n);
    report.name = name;
    const double off_tol = 3.0 / std::sqrt(static_cast<double>(n));

    auto check_matrix = [&](const char* label, const Eigen::MatrixXcd& mat, double expected) {
        double diag_err = 0.0;
        double off_mag = 0.0;
        for (int r = 0; r < k; ++r) {
            diag_err = std::max(diag_err, std::fabs(mat(r, r).real() - expected));
            off_mag = std::max(off_mag, std::fabs(mat(r, r).imag()));
            for (int c = 0; c < k; ++c)
                if (c != r) off_mag = std::max(off_mag, std::abs(mat(r, c)));
        }
        report.add(std::string(label) + " diagonal rel err", diag_err / expected, diag_rel_tol,
                   diag_err / expected <= diag_rel_tol);
        report.add(std::string(label) + " max off-diagonal", off_mag, off_tol,
                   off_mag <= off_tol);
    };

    check_matrix("E[F^H H]", mean_fh, t_over_k * e1);
    check_matrix("E[F^H H H^H F]", mean_fhhf, t_over_k * e2);
    check_matrix("E[F^H F]", mean_ff, t_over_k * e3);
    // Estimate covariance: E[xbar xbar^H] = E[F^H H H^H F] + sigma2 E[F^H F].
    check_matrix("E[xbar xbar^H]", mean_fhhf + sigma2 * mean_ff, t_over_k * e1);
    return report;
}

CheckReport simulate_qci_chain(ChannelDims dims, double sigma2, const QuantGrid& grid,
                               const QciAllocation& alloc, long n, std::uint64_t seed) {
    if (dims.k > dims.m) throw UnsupportedConfig("simulate_qci_chain: requires K <= M");
    const int j_levels = grid.levels();
    if (static_cast<int>(alloc.c_bits.size()) != j_levels)
        throw std::invalid_argument("simulate_qci_chain: allocation does not match grid");

    std::vector<double> phi(j_levels, 0.0);
    std::vector<double> pred_var(j_levels, 1.0);
    for (int j = 0; j + 1 < j_levels; ++j) {
        phi[j] = repr_fading(grid.points[j], alloc.c_bits[j]);
        pred_var[j] = phi[j] * phi[j] * (1.0 + grid.points[j]) + 1.0;
    }

    std::vector<long> level_counts(j_levels, 0);
    std::vector<double> level_z2(j_levels, 0.0);
    double min_added_var = 0.0;
    long resamples = 0;

    const double sigma = std::sqrt(sigma2);
    for (long i = 0; i < n; ++i) {
        PhiloxRng rng(seed, salt(5, i));
        Eigen::MatrixXcd h;
        Eigen::MatrixXcd g;
        for (;;) {
            h = draw_h(dims, rng);
            g = h.adjoint() * h;
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(g, Eigen::EigenvaluesOnly);
            if (es.info() == Eigen::Success &&
                es.eigenvalues()(dims.k - 1) <= kCondLimit * es.eigenvalues()(0))
                break;
            if (++resamples > kMaxResampleFraction * n + 16) break;
        }
        const Eigen::MatrixXcd ginv = g.inverse();
        const Eigen::MatrixXcd pinv = ginv * h.adjoint();

        Eigen::VectorXcd x(dims.k);
        for (int c = 0; c < dims.k; ++c) x(c) = rng.gaussian();
        Eigen::VectorXcd noise(dims.m);
        for (int r = 0; r < dims.m; ++r) noise(r) = sigma * rng.gaussian();
        const Eigen::VectorXcd xt = x + pinv * noise;

        for (int c = 0; c < dims.k; ++c) {
            const double a = sigma2 * ginv(c, c).real();
            const int level = static_cast<int>(
                std::lower_bound(grid.points.begin(), grid.points.end(), a) -
                grid.points.begin());
            ++level_counts[level];
            std::complex<double> xhat = xt(c);
            if (level + 1 < j_levels) {
                const double added = grid.points[level] - a;
                min_added_var = std::min(min_added_var, added);
                xhat += std::sqrt(std::max(added, 0.0)) * rng.gaussian();
            }
            const std::complex<double> z = phi[level] * xhat + rng.gaussian();
            level_z2[level] += std::norm(z);
        }
    }

    CheckReport report;
    char name[96];
    std::snprintf(name, sizeof(name), "channel-inversion chain vs MC (K=%d, M=%d, n=%ld)",
                  dims.k, dims.m, n);
    report.name = name;

    const double pool = static_cast<double>(n) * dims.k;
    for (int j = 0; j < j_levels; ++j) {
        const double p = grid.pmf[j];
        const double emp = level_counts[j] / pool;
        const double tol = 3.0 * std::sqrt(std::max(p * (1.0 - p), 1e-12) / pool) + 2.0 / pool;
        char item[64];
        std::snprintf(item, sizeof(item), "level %d pmf deviation", j + 1);
        report.add_abs(item, emp - p, tol);
    }
    report.add("artificial noise variance min", min_added_var, 1e-12, min_added_var >= -1e-12);
    for (int j = 0; j < j_levels; ++j) {
        if (level_counts[j] < 100) continue;
        const double emp_var = level_z2[j] / level_counts[j];
        const double rel = emp_var / pred_var[j] - 1.0;
        const double tol = 6.0 / std::sqrt(static_cast<double>(level_counts[j]));
        char item[64];
        std::snprintf(item, sizeof(item), "level %d representation variance rel err", j + 1);
        report.add_abs(item, rel, tol);
    }

    // Conditional covariance of the degraded noise for a few fixed channels:
    // diag snapped up to the grid, off-diagonal part untouched.
    const long n_inner = std::max<long>(2000, n / 10);
    double worst_sigma_units = 0.0;
    for (int rep = 0; rep < 5; ++rep) {
        PhiloxRng rng(seed, salt(6, rep));
        Eigen::MatrixXcd h;
        Eigen::MatrixXcd g;
        for (;;) {
            h = draw_h(dims, rng);
            g = h.adjoint() * h;
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(g, Eigen::EigenvaluesOnly);
            if (es.info() == Eigen::Success &&
                es.eigenvalues()(dims.k - 1) <= kCondLimit * es.eigenvalues()(0))
                break;
        }
        const Eigen::MatrixXcd ginv = g.inverse();
        const Eigen::MatrixXcd pinv = ginv * h.adjoint();
        const Eigen::MatrixXcd a_mat = sigma2 * ginv;

        std::vector<int> levels(dims.k);
        std::vector<double> added_sd(dims.k, 0.0);
        bool all_finite = true;
        Eigen::MatrixXcd pred = a_mat;
        for (int c = 0; c < dims.k; ++c) {
            const double a = a_mat(c, c).real();
            levels[c] = static_cast<int>(
                std::lower_bound(grid.points.begin(), grid.points.end(), a) -
                grid.points.begin());
            if (levels[c] + 1 < j_levels) {
                const double b = grid.points[levels[c]];
                added_sd[c] = std::sqrt(std::max(b - a, 0.0));
                pred(c, c) = b;
            } else {
                all_finite = false;
            }
        }
        if (!all_finite) continue;  // a coordinate on the open last level is not forwarded

        Eigen::MatrixXcd emp = Eigen::MatrixXcd::Zero(dims.k, dims.k);
        for (long i = 0; i < n_inner; ++i) {
            Eigen::VectorXcd noise(dims.m);
            for (int r = 0; r < dims.m; ++r) noise(r) = sigma * rng.gaussian();
            Eigen::VectorXcd nhat = pinv * noise;
            for (int c = 0; c < dims.k; ++c) nhat(c) += added_sd[c] * rng.gaussian();
            emp += nhat * nhat.adjoint();
        }
        emp /= static_cast<double>(n_inner);
        for (int r = 0; r < dims.k; ++r)
            for (int c = 0; c < dims.k; ++c) {
                const double scale = std::sqrt((pred(r, r).real() * pred(c, c).real() +
                                                std::norm(pred(r, c))) /
                                               n_inner);
                worst_sigma_units =
                    std::max(worst_sigma_units, std::abs(emp(r, c) - pred(r, c)) / scale);
            }
    }
    report.add("conditional noise covariance deviation (sigma units)", worst_sigma_units, 4.5,
               worst_sigma_units <= 4.5);
    report.add("resample fraction", static_cast<double>(resamples) / n, kMaxResampleFraction,
               resamples <= kMaxResampleFraction * n);
    return report;
}

CheckReport check_matrix_inequalities(int k, int trials, std::uint64_t seed) {
    if (k < 1 || trials < 1)
        throw std::invalid_argument("check_matrix_inequalities: k and trials must be >= 1");
    double worst_logdet = 0.0;   // violation of the diagonal-part bound
    double worst_trace = 0.0;    // violation of tr(N1^-1) <= tr(N^-1)
    double worst_major = 0.0;    // violation of the majorization partial sums
    for (int trial = 0; trial < trials; ++trial) {
        PhiloxRng rng(seed, salt(7, (static_cast<std::uint64_t>(k) << 32) | trial));
        Eigen::MatrixXcd a(k, k);
        for (int c = 0; c < k; ++c)
            for (int r = 0; r < k; ++r) a(r, c) = rng.gaussian();
        const Eigen::MatrixXcd n_mat =
            a * a.adjoint() + 0.05 * Eigen::MatrixXcd::Identity(k, k);

        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(n_mat, Eigen::EigenvaluesOnly);
        const Eigen::VectorXd theta = es.eigenvalues();  // ascending, positive
        std::vector<double> diag(k);
        for (int r = 0; r < k; ++r) diag[r] = n_mat(r, r).real();
        std::sort(diag.begin(), diag.end(), std::greater<>());

        double lhs = 0.0, rhs = 0.0, tr_n = 0.0, tr_n1 = 0.0;
        for (int r = 0; r < k; ++r) {
            lhs += std::log1p(theta[r]) - std::log(theta[r]);
            rhs += std::log1p(diag[r]) - std::log(diag[r]);
            tr_n += 1.0 / theta[r];
            tr_n1 += 1.0 / diag[r];
        }
        worst_logdet = std::max(worst_logdet, rhs - lhs);
        worst_trace = std::max(worst_trace, tr_n1 - tr_n);

        double sum_diag = 0.0, sum_theta = 0.0;
        for (int r = 0; r < k; ++r) {
            sum_diag += diag[r];
            sum_theta += theta[k - 1 - r];  // descending
            if (r + 1 < k) worst_major = std::max(worst_major, sum_diag - sum_theta);
        }
        worst_major = std::max(worst_major, std::fabs(sum_diag - sum_theta));  // traces equal
    }

    CheckReport report;
    char name[96];
    std::snprintf(name, sizeof(name), "matrix inequality properties (k=%d, trials=%d)", k,
                  trials);
    report.name = name;
    report.add("log-det diagonal bound violation", worst_logdet, 1e-10, worst_logdet <= 1e-10);
    report.add("inverse-trace bound violation", worst_trace, 1e-10, worst_trace <= 1e-10);
    report.add("majorization violation", worst_major, 1e-10, worst_major <= 1e-10);
    return report;
}

std::string SuiteReport::to_text() const {
    std::string out;
    for (const auto& c : checks) out += c.to_text();
    out += pass ? "oracle suite: all checks passed\n" : "oracle suite: FAILURES present\n";
    return out;
}

std::string SuiteReport::to_csv() const {
    std::string out = "check,item,value,tolerance,pass\n";
    char line[320];
    for (const auto& c : checks)
        for (const auto& it : c.items) {
            std::snprintf(line, sizeof(line), "\"%s\",\"%s\",%.9g,%.9g,%d\n", c.name.c_str(),
                          it.name.c_str(), it.value, it.tolerance, it.pass ? 1 : 0);
            out += line;
        }
    return out;
}

SuiteReport run_suite(SuiteLevel level, std::uint64_t seed) {
    const long n = level == SuiteLevel::quick ? 10000 : 100000;
    const double sigma2 = 0.1;
    SuiteReport suite;

    auto bin_tol = [&](long pool) {
        return std::max(0.05, 3.5 * std::sqrt((kBins - 1.0) / pool));
    };

    const ChannelDims dims_list[3] = {{1, 2}, {2, 2}, {2, 4}};
    for (const auto dims : dims_list)
        suite.checks.push_back(
            empirical_eig_check(dims, n, seed, bin_tol(n * dims.t())));

    {
        CheckReport cap;
        cap.name = "ergodic capacity vs MC (K=2, M=2)";
        for (double snr_db : {0.0, 10.0, 20.0}) {
            const ChannelConfig cfg = ChannelConfig::from_snr_db({2, 2}, snr_db, 1.0);
            const double closed = capacity(cfg);
            const double mc = empirical_capacity(cfg, n, seed);
            char item[64];
            std::snprintf(item, sizeof(item), "relative error at %.0f dB", snr_db);
            cap.add_abs(item, mc / closed - 1.0, 0.01);
        }
        suite.checks.push_back(cap);
    }

    for (const auto dims : dims_list)
        suite.checks.push_back(
            empirical_noise_levels(dims, sigma2, n, seed, bin_tol(n * dims.k)).report);

    // 1% is calibrated for 1e5 samples; keep ~5 sigma of headroom below that.
    const double diag_tol = level == SuiteLevel::quick ? 0.04 : 0.01;
    for (const auto dims : {ChannelDims{2, 2}, ChannelDims{2, 4}, ChannelDims{4, 2}})
        suite.checks.push_back(check_covariance_identities(dims, sigma2, n, seed, diag_tol));

    {
        const ChannelDims dims{2, 4};
        const NoiseLevelDensity density(dims, sigma2);
        const QuantGrid grid = density.quantiles(4);
        const double c_bits = dims.k * (std::log2(4.0) + 3.0);
        const QciAllocation alloc = qci_waterfill(grid, dims.k, c_bits);
        suite.checks.push_back(simulate_qci_chain(dims, sigma2, grid, alloc, n, seed));
    }

    for (int k : {1, 2, 4, 8})
        suite.checks.push_back(check_matrix_inequalities(k, 1000, seed));

    for (const auto& c : suite.checks) suite.pass = suite.pass && c.pass;
    return suite;
}

}  // namespace ibrelay::oracle
