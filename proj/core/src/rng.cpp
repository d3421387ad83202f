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

#include "ibrelay/rng.hpp"

#include <cmath>

namespace ibrelay {

namespace {

constexpr std::uint32_t kPhiloxW32A = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW32B = 0xBB67AE85u;
constexpr std::uint32_t kPhiloxM4x32A = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM4x32B = 0xCD9E8D57u;

inline void round_once(std::array<std::uint32_t, 4>& ctr, std::array<std::uint32_t, 2>& key) {
    const std::uint64_t p0 = static_cast<std::uint64_t>(kPhiloxM4x32A) * ctr[0];
    const std::uint64_t p1 = static_cast<std::uint64_t>(kPhiloxM4x32B) * ctr[2];
    const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
    const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
    const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
    const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    key[0] += kPhiloxW32A;
    key[1] += kPhiloxW32B;
}

}  // namespace

std::array<std::uint32_t, 4> PhiloxRng::block(std::uint64_t index) const {
    std::array<std::uint32_t, 4> ctr = {
        static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
        static_cast<std::uint32_t>(stream_), static_cast<std::uint32_t>(stream_ >> 32)};
    std::array<std::uint32_t, 2> key = {static_cast<std::uint32_t>(seed_),
                                        static_cast<std::uint32_t>(seed_ >> 32)};
    for (int r = 0; r < 10; ++r) round_once(ctr, key);
    return ctr;
}

std::uint32_t PhiloxRng::next_u32() {
    if (buffer_pos_ == 4) {
        buffer_ = block(block_index_++);
        buffer_pos_ = 0;
    }
    return buffer_[buffer_pos_++];
}

double PhiloxRng::uniform() {
    // (x + 1) / 2^32 lies in (0, 1]; never 0 so logs are safe.
    return (static_cast<double>(next_u32()) + 1.0) * (1.0 / 4294967296.0);
}

std::complex<double> PhiloxRng::gaussian() {
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-std::log(u1));
    const double theta = 6.283185307179586 * u2;
    return {r * std::cos(theta), r * std::sin(theta)};
}

}  // namespace ibrelay
