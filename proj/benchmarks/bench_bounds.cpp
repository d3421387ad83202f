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

#include <benchmark/benchmark.h>

#include "ibrelay/bounds.hpp"
#include "ibrelay/mmse.hpp"
#include "ibrelay/oracle.hpp"
#include "ibrelay/qci.hpp"

namespace {

using namespace ibrelay;

void BM_EigPdf(benchmark::State& state) {
    const EigDensity density(ChannelDims(2, static_cast<int>(state.range(0))));
    double lam = 0.5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(density.pdf(lam));
        lam = lam < 50.0 ? lam + 0.1 : 0.5;
    }
}
BENCHMARK(BM_EigPdf)->Arg(2)->Arg(16)->Arg(64);

void BM_Capacity(benchmark::State& state) {
    const ChannelConfig cfg = ChannelConfig::from_snr_db(ChannelDims(2, 2), 10.0, 8.0);
    for (auto _ : state) benchmark::DoNotOptimize(capacity(cfg));
}
BENCHMARK(BM_Capacity);

void BM_UpperBound(benchmark::State& state) {
    const ChannelConfig cfg =
        ChannelConfig::from_snr_db(ChannelDims(2, 2), 10.0, static_cast<double>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(upper_bound(cfg));
}
BENCHMARK(BM_UpperBound)->Arg(8)->Arg(40);

void BM_QciQuantileRate(benchmark::State& state) {
    const ChannelConfig cfg = ChannelConfig::from_snr_db(ChannelDims(2, 2), 10.0, 40.0);
    const NoiseLevelDensity density(cfg.dims, cfg.sigma2);
    const int levels = 1 << state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(qci_quantile_rate(cfg, levels, density));
}
BENCHMARK(BM_QciQuantileRate)->Arg(4)->Arg(8);

void BM_MmseRate(benchmark::State& state) {
    const ChannelConfig cfg = ChannelConfig::from_snr_db(ChannelDims(2, 2), 10.0, 8.0);
    for (auto _ : state) benchmark::DoNotOptimize(mmse_rate(cfg));
}
BENCHMARK(BM_MmseRate);

void BM_SampleChannel(benchmark::State& state) {
    const ChannelDims dims(2, static_cast<int>(state.range(0)));
    std::uint64_t stream = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(oracle::sample_channel(dims, oracle::kDefaultSeed, stream++));
}
BENCHMARK(BM_SampleChannel)->Arg(2)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
