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

#ifndef IBRELAY_RNG_HPP
#define IBRELAY_RNG_HPP

#include <array>
#include <complex>
#include <cstdint>

namespace ibrelay {

/// Counter-based Philox4x32-10 generator. Output is a pure function of
/// (seed, stream, block counter), so independent streams can be drawn in
/// parallel and results never depend on scheduling.
class PhiloxRng {
  public:
    PhiloxRng(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream) {}

    std::uint32_t next_u32();

    /// Uniform draw in (0, 1].
    double uniform();

    /// Standard circularly-symmetric complex Gaussian CN(0, 1):
    /// each component N(0, 1/2). Consumes two uniforms.
    std::complex<double> gaussian();

  private:
    std::array<std::uint32_t, 4> block(std::uint64_t index) const;

    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t block_index_ = 0;
    std::array<std::uint32_t, 4> buffer_{};
    int buffer_pos_ = 4;
};

}  // namespace ibrelay

#endif  // IBRELAY_RNG_HPP
