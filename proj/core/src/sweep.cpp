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

#include "ibrelay/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <tuple>

#include "ibrelay/bounds.hpp"
#include "ibrelay/mmse.hpp"
#include "ibrelay/oracle.hpp"
#include "ibrelay/qci.hpp"

namespace ibrelay {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string cell(const std::optional<double>& v) { return v ? fmt(*v) : "NA"; }

const char* axis_name(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::snr_db: return "snr_db";
        case SweepAxis::capacity_bits: return "capacity_bits";
        default: return "antennas_m";
    }
}

ChannelConfig config_at(const SweepSpec& spec, double value) {
    switch (spec.axis) {
        case SweepAxis::snr_db:
            return ChannelConfig::from_snr_db(spec.fixed.dims, value, spec.fixed.capacity_bits);
        case SweepAxis::capacity_bits:
            return ChannelConfig(spec.fixed.dims, spec.fixed.sigma2, value);
        default:
            return ChannelConfig(ChannelDims(spec.fixed.dims.k, static_cast<int>(value)),
                                 spec.fixed.sigma2, spec.fixed.capacity_bits);
    }
}

}  // namespace

void SweepSpec::validate() const {
    if (axis_values.empty()) throw std::invalid_argument("sweep: no axis values");
    for (std::size_t i = 1; i < axis_values.size(); ++i)
        if (!(axis_values[i] > axis_values[i - 1]))
            throw std::invalid_argument("sweep: axis values must be strictly increasing");
    if (axis == SweepAxis::antennas_m)
        for (double v : axis_values)
            if (v < 1.0 || v != std::floor(v))
                throw std::invalid_argument("sweep: antenna counts must be positive integers");
    if (axis == SweepAxis::capacity_bits)
        for (double v : axis_values)
            if (v < 0.0) throw std::invalid_argument("sweep: budgets must be non-negative");
    for (int b : qci_bits)
        if (b < 1 || b > 16) throw std::invalid_argument("sweep: quantizer bits must be in [1,16]");
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
    spec.validate();
    // Quantile grids depend on (dims, sigma2, J) only; cache them across rows.
    std::map<std::tuple<int, int, long long, int>, QuantGrid> grid_cache;
    auto quantile_grid = [&](const ChannelConfig& cfg, int j_levels) {
        const long long s2_key = static_cast<long long>(std::llround(cfg.sigma2 * 1e15));
        const auto key = std::make_tuple(cfg.dims.k, cfg.dims.m, s2_key, j_levels);
        auto it = grid_cache.find(key);
        if (it == grid_cache.end()) {
            NoiseLevelDensity density(cfg.dims, cfg.sigma2);
            it = grid_cache.emplace(key, density.quantiles(j_levels)).first;
        }
        return it->second;
    };

    std::vector<SweepRow> rows;
    rows.reserve(spec.axis_values.size());
    for (double v : spec.axis_values) {
        const ChannelConfig cfg = config_at(spec, v);
        SweepRow row;
        row.axis_value = v;
        if (spec.with_ub) row.r_ub = upper_bound(cfg);
        if (spec.with_qci) {
            for (int b : spec.qci_bits) {
                std::optional<double> rate;
                if (cfg.dims.k <= cfg.dims.m && b < cfg.capacity_bits / cfg.dims.k - 1e-9) {
                    const QuantGrid grid = quantile_grid(cfg, 1 << b);
                    try {
                        const QciAllocation alloc = qci_waterfill(grid, cfg.dims.k, cfg.capacity_bits);
                        rate = qci_rate(grid, alloc, cfg.dims.k);
                    } catch (const InfeasibleBudget&) {
                        // boundary cell: feasible by B < C/K but not by the grid entropy
                    }
                }
                row.r_qci.push_back(rate);
            }
        }
        if (spec.with_mmse) row.r_mmse = cfg.capacity_bits > 0.0 ? mmse_rate(cfg) : 0.0;
        if (spec.with_limits) {
            row.ub_limit_c = capacity(cfg);
            if (cfg.dims.k <= cfg.dims.m)
                row.qci_limit_c = qci_limit_rate(cfg, NoiseLevelDensity(cfg.dims, cfg.sigma2));
            row.mmse_limit_c = mmse_limits(cfg).limit_large_c;
        }
        if (spec.mc_samples > 0)
            row.capacity_mc = oracle::empirical_capacity(cfg, spec.mc_samples, spec.seed);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<std::string> sweep_columns(const SweepSpec& spec) {
    std::vector<std::string> cols;
    cols.emplace_back(axis_name(spec.axis));
    if (spec.with_ub) cols.emplace_back("r_ub");
    if (spec.with_qci)
        for (int b : spec.qci_bits) cols.push_back("r_qci_b" + std::to_string(b));
    if (spec.with_mmse) cols.emplace_back("r_mmse");
    if (spec.with_limits) {
        cols.emplace_back("ub_limit_c");
        cols.emplace_back("qci_limit_c");
        cols.emplace_back("mmse_limit_c");
    }
    if (spec.mc_samples > 0) cols.emplace_back("capacity_mc");
    return cols;
}

namespace {

std::vector<std::vector<std::optional<double>>> value_columns(const std::vector<SweepRow>& rows,
                                                              const SweepSpec& spec) {
    std::vector<std::vector<std::optional<double>>> cols;
    auto push = [&](auto getter) {
        std::vector<std::optional<double>> col;
        col.reserve(rows.size());
        for (const auto& r : rows) col.push_back(getter(r));
        cols.push_back(std::move(col));
    };
    if (spec.with_ub) push([](const SweepRow& r) { return r.r_ub; });
    if (spec.with_qci)
        for (std::size_t i = 0; i < spec.qci_bits.size(); ++i)
            push([i](const SweepRow& r) {
                return i < r.r_qci.size() ? r.r_qci[i] : std::optional<double>();
            });
    if (spec.with_mmse) push([](const SweepRow& r) { return r.r_mmse; });
    if (spec.with_limits) {
        push([](const SweepRow& r) { return r.ub_limit_c; });
        push([](const SweepRow& r) { return r.qci_limit_c; });
        push([](const SweepRow& r) { return r.mmse_limit_c; });
    }
    if (spec.mc_samples > 0) push([](const SweepRow& r) { return r.capacity_mc; });
    return cols;
}

}  // namespace

std::string render_csv(const std::vector<SweepRow>& rows, const SweepSpec& spec) {
    if (rows.empty()) throw std::invalid_argument("render_csv: no rows");
    const std::vector<std::string> cols = sweep_columns(spec);
    const auto values = value_columns(rows, spec);
    std::string out;
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (c) out += ',';
        out += cols[c];
    }
    out += '\n';
    for (std::size_t r = 0; r < rows.size(); ++r) {
        out += fmt(rows[r].axis_value);
        for (const auto& col : values) {
            out += ',';
            out += cell(col[r]);
        }
        out += '\n';
    }
    return out;
}

std::string render_svg(const std::vector<SweepRow>& rows, const SweepSpec& spec) {
    if (rows.empty()) throw std::invalid_argument("render_svg: no rows");
    const std::vector<std::string> cols = sweep_columns(spec);
    const auto values = value_columns(rows, spec);

    const double width = 880.0, height = 560.0;
    const double ml = 70.0, mr = 180.0, mt = 30.0, mb = 55.0;
    const double pw = width - ml - mr, ph = height - mt - mb;

    double xmin = rows.front().axis_value, xmax = rows.back().axis_value;
    if (xmax <= xmin) {
        xmin -= 1.0;
        xmax += 1.0;
    }
    double ymin = 0.0, ymax = 1.0;
    bool any = false;
    for (const auto& col : values)
        for (const auto& v : col)
            if (v) {
                ymin = any ? std::min(ymin, *v) : std::min(0.0, *v);
                ymax = any ? std::max(ymax, *v) : *v;
                any = true;
            }
    if (!any) ymax = 1.0;
    if (ymax <= ymin) ymax = ymin + 1.0;
    ymax += 0.05 * (ymax - ymin);

    auto sx = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * pw; };
    auto sy = [&](double y) { return mt + ph - (y - ymin) / (ymax - ymin) * ph; };

    static const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                     "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
    char buf[256];
    std::string out;
    std::snprintf(buf, sizeof(buf),
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"%.0f\" "
                  "height=\"%.0f\" viewBox=\"0 0 %.0f %.0f\">\n",
                  width, height, width, height);
    out += buf;
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // axes and ticks
    std::snprintf(buf, sizeof(buf),
                  "<rect x=\"%.1f\" y=\"%.1f\" width=\"%.1f\" height=\"%.1f\" fill=\"none\" "
                  "stroke=\"black\"/>\n",
                  ml, mt, pw, ph);
    out += buf;
    const int ticks = 6;
    for (int i = 0; i <= ticks; ++i) {
        const double fx = xmin + (xmax - xmin) * i / ticks;
        const double fy = ymin + (ymax - ymin) * i / ticks;
        std::snprintf(buf, sizeof(buf),
                      "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"#cccccc\"/>\n",
                      sx(fx), mt, sx(fx), mt + ph);
        out += buf;
        std::snprintf(buf, sizeof(buf),
                      "<text x=\"%.1f\" y=\"%.1f\" font-size=\"12\" text-anchor=\"middle\">%s"
                      "</text>\n",
                      sx(fx), mt + ph + 18.0, fmt(fx).c_str());
        out += buf;
        std::snprintf(buf, sizeof(buf),
                      "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"#cccccc\"/>\n",
                      ml, sy(fy), ml + pw, sy(fy));
        out += buf;
        std::snprintf(buf, sizeof(buf),
                      "<text x=\"%.1f\" y=\"%.1f\" font-size=\"12\" text-anchor=\"end\">%s</text>\n",
                      ml - 6.0, sy(fy) + 4.0, fmt(fy).c_str());
        out += buf;
    }
    std::snprintf(buf, sizeof(buf),
                  "<text x=\"%.1f\" y=\"%.1f\" font-size=\"14\" text-anchor=\"middle\">%s</text>\n",
                  ml + pw / 2, height - 12.0, axis_name(spec.axis));
    out += buf;
    std::snprintf(buf, sizeof(buf),
                  "<text x=\"18\" y=\"%.1f\" font-size=\"14\" text-anchor=\"middle\" "
                  "transform=\"rotate(-90 18 %.1f)\">rate [bits/complex dimension]</text>\n",
                  mt + ph / 2, mt + ph / 2);
    out += buf;

    for (std::size_t c = 0; c < values.size(); ++c) {
        const char* color = kPalette[c % 8];
        // polyline segments; missing cells break the line
        std::string segment;
        int seg_points = 0;
        auto flush = [&] {
            if (seg_points >= 2) {
                out += "<polyline fill=\"none\" stroke=\"";
                out += color;
                out += "\" stroke-width=\"1.8\" points=\"" + segment + "\"/>\n";
            }
            segment.clear();
            seg_points = 0;
        };
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (!values[c][r]) {
                flush();
                continue;
            }
            std::snprintf(buf, sizeof(buf), "%.1f,%.1f ", sx(rows[r].axis_value),
                          sy(*values[c][r]));
            segment += buf;
            ++seg_points;
        }
        flush();
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (!values[c][r]) continue;
            std::snprintf(buf, sizeof(buf),
                          "<circle cx=\"%.1f\" cy=\"%.1f\" r=\"2.5\" fill=\"%s\"/>\n",
                          sx(rows[r].axis_value), sy(*values[c][r]), color);
            out += buf;
        }
        // legend entry
        const double ly = mt + 14.0 + 18.0 * c;
        std::snprintf(buf, sizeof(buf),
                      "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"%s\" "
                      "stroke-width=\"1.8\"/>\n",
                      ml + pw + 12.0, ly, ml + pw + 36.0, ly, color);
        out += buf;
        std::snprintf(buf, sizeof(buf),
                      "<text x=\"%.1f\" y=\"%.1f\" font-size=\"12\">%s</text>\n", ml + pw + 42.0,
                      ly + 4.0, cols[c + 1].c_str());
        out += buf;
    }
    out += "</svg>\n";
    return out;
}

namespace {

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace

void emit_csv(const std::vector<SweepRow>& rows, const SweepSpec& spec, const std::string& path) {
    write_file(path, render_csv(rows, spec));
}

void emit_svg(const std::vector<SweepRow>& rows, const SweepSpec& spec, const std::string& path) {
    write_file(path, render_svg(rows, spec));
}

SweepSpec preset_snr_sweep() {
    SweepSpec spec;
    spec.axis = SweepAxis::snr_db;
    for (int db = 0; db <= 50; db += 5) spec.axis_values.push_back(db);
    spec.fixed = ChannelConfig(ChannelDims(2, 2), 1.0, 40.0);
    spec.qci_bits = {4, 8};
    return spec;
}

SweepSpec preset_capacity_sweep() {
    SweepSpec spec;
    spec.axis = SweepAxis::capacity_bits;
    for (int c = 2; c <= 80; c += 2) spec.axis_values.push_back(c);
    spec.fixed = ChannelConfig::from_snr_db(ChannelDims(4, 4), 40.0, 40.0);
    spec.qci_bits = {4, 8};
    return spec;
}

SweepSpec preset_antennas_sweep() {
    SweepSpec spec;
    spec.axis = SweepAxis::antennas_m;
    spec.axis_values = {2, 3, 4, 6, 8, 12, 16, 24, 32, 48, 64};
    spec.fixed = ChannelConfig::from_snr_db(ChannelDims(2, 2), 40.0, 40.0);
    spec.qci_bits = {4, 8};
    return spec;
}

}  // namespace ibrelay
