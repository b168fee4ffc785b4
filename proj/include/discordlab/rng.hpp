// Copyright 2026 The discordlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <limits>

namespace discordlab {

/// Explicit seed for every stochastic operation.
struct RandomSeed {
    std::uint64_t value = 0;
};

/// Counter-based generator: the n-th output is a pure function of
/// (key, n), so streams can be split by lattice index and evaluated in any
/// order. Output mixing is the SplitMix64 finalizer.
class CounterRng {
  public:
    using result_type = std::uint64_t;

    explicit constexpr CounterRng(RandomSeed seed) : key_(mix(seed.value)) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() {
        return std::numeric_limits<result_type>::max();
    }

    /// Independent child stream for `index`; does not advance this stream.
    [[nodiscard]] constexpr CounterRng split(std::uint64_t index) const {
        CounterRng child(RandomSeed{});
        child.key_ = mix(key_ ^ mix(index + 0x632be59bd9b4e019ULL));
        return child;
    }

    constexpr result_type operator()() {
        return mix(key_ + (++counter_) * 0x9e3779b97f4a7c15ULL);
    }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller (one draw per call, two uniforms).
    double normal();

    [[nodiscard]] constexpr std::uint64_t counter() const { return counter_; }

  private:
    static constexpr std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

} // namespace discordlab
