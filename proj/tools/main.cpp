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

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ibrelay/bounds.hpp"
#include "ibrelay/mmse.hpp"
#include "ibrelay/oracle.hpp"
#include "ibrelay/qci.hpp"
#include "ibrelay/sweep.hpp"

namespace {

std::uint64_t default_seed() {
    if (const char* env = std::getenv("IBRELAY_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0') return v;
        std::cerr << "warning: ignoring non-numeric IBRELAY_SEED\n";
    }
    return ibrelay::oracle::kDefaultSeed;
}

struct Options {
    int k = 2;
    int m = 2;
    double snr_db = 10.0;
    double capacity_bits = 8.0;
    std::vector<int> qci_bits = {4};
    std::vector<std::string> schemes = {"ub", "qci", "mmse"};
    long samples = 0;
    std::uint64_t seed = default_seed();
    // sweep
    std::string axis = "snr_db";
    double from = 0.0, to = 50.0, step = 5.0;
    std::string out_path, svg_path;
    bool with_limits = false;
    // oracle
    std::string level = "quick";

    bool has_scheme(const std::string& s) const {
        for (const auto& x : schemes)
            if (x == s) return true;
        return false;
    }
};

int run_point(const Options& o) {
    using namespace ibrelay;
    const ChannelConfig cfg =
        ChannelConfig::from_snr_db(ChannelDims(o.k, o.m), o.snr_db, o.capacity_bits);
    std::printf("K=%d M=%d snr=%.6g dB (sigma2=%.6g) C=%.6g bits/complex dim\n", o.k, o.m,
                o.snr_db, cfg.sigma2, cfg.capacity_bits);
    std::printf("  %-22s %12.6f\n", "capacity", capacity(cfg));
    if (o.has_scheme("ub")) std::printf("  %-22s %12.6f\n", "upper bound", upper_bound(cfg));
    if (o.has_scheme("qci")) {
        for (int b : o.qci_bits) {
            char label[32];
            std::snprintf(label, sizeof(label), "qci (B=%d)", b);
            if (cfg.dims.k > cfg.dims.m) {
                std::printf("  %-22s %12s\n", label, "NA (K>M)");
                continue;
            }
            try {
                const NoiseLevelDensity density(cfg.dims, cfg.sigma2);
                std::printf("  %-22s %12.6f\n", label, qci_quantile_rate(cfg, 1 << b, density));
            } catch (const InfeasibleBudget&) {
                std::printf("  %-22s %12s\n", label, "NA (B >= C/K)");
            }
        }
        if (cfg.dims.k <= cfg.dims.m) {
            const NoiseLevelDensity density(cfg.dims, cfg.sigma2);
            std::printf("  %-22s %12.6f\n", "qci limit (C->inf)", qci_limit_rate(cfg, density));
        }
    }
    if (o.has_scheme("mmse")) {
        if (cfg.capacity_bits > 0.0) {
            const MmseRateResult r = mmse_rate_detail(cfg);
            std::printf("  %-22s %12.6f%s\n", "mmse", r.rate_bits,
                        r.clamped ? "  (clamped, bound vacuous here)" : "");
        } else {
            std::printf("  %-22s %12.6f\n", "mmse", 0.0);
        }
        std::printf("  %-22s %12.6f\n", "mmse limit (C->inf)", mmse_limits(cfg).limit_large_c);
    }
    if (o.samples > 0) {
        std::printf("  %-22s %12.6f  (n=%ld, seed=%llu)\n", "capacity (MC)",
                    oracle::empirical_capacity(cfg, o.samples, o.seed), o.samples,
                    static_cast<unsigned long long>(o.seed));
    }
    return 0;
}

int run_sweep_cmd(const Options& o) {
    using namespace ibrelay;
    SweepSpec spec;
    if (o.axis == "snr_db")
        spec.axis = SweepAxis::snr_db;
    else if (o.axis == "capacity_bits")
        spec.axis = SweepAxis::capacity_bits;
    else
        spec.axis = SweepAxis::antennas_m;
    for (double v = o.from; v <= o.to + 1e-9; v += o.step) spec.axis_values.push_back(v);
    spec.fixed =
        ChannelConfig::from_snr_db(ChannelDims(o.k, o.m), o.snr_db, o.capacity_bits);
    spec.with_ub = o.has_scheme("ub");
    spec.with_qci = o.has_scheme("qci");
    spec.with_mmse = o.has_scheme("mmse");
    spec.qci_bits = o.qci_bits;
    spec.with_limits = o.with_limits;
    spec.mc_samples = o.samples;
    spec.seed = o.seed;

    const auto rows = run_sweep(spec);
    if (o.out_path.empty())
        std::cout << render_csv(rows, spec);
    else
        emit_csv(rows, spec, o.out_path);
    if (!o.svg_path.empty()) emit_svg(rows, spec, o.svg_path);
    return 0;
}

int run_oracle_cmd(const Options& o) {
    using namespace ibrelay;
    const auto level = o.level == "quick" ? oracle::SuiteLevel::quick : oracle::SuiteLevel::full;
    const auto suite = oracle::run_suite(level, o.seed);
    std::cout << suite.to_text();
    if (!o.out_path.empty()) {
        std::ofstream out(o.out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open for writing: " + o.out_path);
        out << suite.to_csv();
    }
    return suite.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bounds on the bottleneck rate of an oblivious MIMO relay over Rayleigh fading"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Read options from a key=value file (flags override it)");

    Options o;
    app.add_option("--k", o.k, "Number of channel inputs K")->check(CLI::PositiveNumber);
    app.add_option("--m", o.m, "Number of relay antennas M")->check(CLI::PositiveNumber);
    app.add_option("--snr-db", o.snr_db, "SNR rho in dB");
    app.add_option("--capacity-bits", o.capacity_bits,
                   "Relay-destination budget C in bits/complex dimension")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--qci-bits", o.qci_bits,
                   "Quantizer bits B per sub-channel (one QCI column per value)");
    app.add_option("--scheme", o.schemes, "Schemes to evaluate: ub, qci, mmse")
        ->check(CLI::IsMember({"ub", "qci", "mmse"}));
    app.add_option("--samples", o.samples, "Monte Carlo samples for oracle columns (0 = off)");
    app.add_option("--seed", o.seed, "RNG seed (default: IBRELAY_SEED env, then a fixed value)");
    app.add_option("--axis", o.axis, "Swept parameter (sweep)")
        ->check(CLI::IsMember({"snr_db", "capacity_bits", "antennas_m"}));
    app.add_option("--from", o.from, "First axis value (sweep)");
    app.add_option("--to", o.to, "Last axis value (sweep)");
    app.add_option("--step", o.step, "Axis increment (sweep)")->check(CLI::PositiveNumber);
    app.add_option("--out", o.out_path, "Output path for CSV records (default: stdout)");
    app.add_option("--svg", o.svg_path, "SVG chart output path (sweep)");
    app.add_flag("--limits", o.with_limits, "Append large-budget limit columns (sweep)");
    app.add_option("--level", o.level, "Oracle suite size: quick (1e4) or full (1e5)")
        ->check(CLI::IsMember({"quick", "full"}));

    CLI::App* point_cmd = app.add_subcommand("point", "Evaluate all bounds at one configuration");
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "Sweep one parameter and emit CSV/SVG");
    CLI::App* oracle_cmd =
        app.add_subcommand("oracle", "Run the Monte Carlo cross-validation suite");
    for (CLI::App* sub : {point_cmd, sweep_cmd, oracle_cmd}) sub->fallthrough(true);

    CLI11_PARSE(app, argc, argv);

    try {
        if (point_cmd->parsed()) return run_point(o);
        if (sweep_cmd->parsed()) return run_sweep_cmd(o);
        if (oracle_cmd->parsed()) return run_oracle_cmd(o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
