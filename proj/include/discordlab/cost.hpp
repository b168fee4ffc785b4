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
#include <optional>
#include <string>

namespace discordlab {

__extension__ typedef unsigned __int128 u128;

std::string to_decimal(u128 value);

/// a * b, or nullopt on overflow.
std::optional<u128> checked_mul(u128 a, u128 b);

/// base^exponent, or nullopt on overflow.
std::optional<u128> checked_pow(u128 base, unsigned exponent);

/// d_a^2 + d_b^2 - d_a - d_b + 1: parameter count of the protocol sweep.
unsigned protocol_exponent(unsigned d_a, unsigned d_b);

/// d_a^2 - d_a: parameters of an explicit A-basis sweep.
unsigned tomography_sampled_exponent(unsigned d_a);

/// (d_a + d_b)^2 - 1 observables per sampled-basis tomography setting.
std::uint64_t tomography_sampled_multiplier(unsigned d_a, unsigned d_b);

/// (d_a d_b)^2 - 1 observables for fixed-basis tomography.
std::uint64_t tomography_fixed_multiplier(unsigned d_a, unsigned d_b);

/// m n^(protocol exponent). Throws cost-overflow past 128 bits.
u128 cost_protocol(std::uint64_t m, std::uint64_t n, unsigned d_a, unsigned d_b);

/// Fixed basis: ((d_a d_b)^2 - 1) m. Sampled basis:
/// ((d_a + d_b)^2 - 1) m n^(d_a^2 - d_a). Throws cost-overflow past 128 bits.
u128 cost_tomography(std::uint64_t m, std::uint64_t n, unsigned d_a,
                     unsigned d_b, bool sampled_basis);

/// Exact decimal counts; never overflow.
struct CostReport {
    std::uint64_t m = 0;
    std::uint64_t n = 0;
    unsigned d_a = 2;
    unsigned d_b = 2;
    std::string protocol_count;
    std::string tomography_fixed_count;
    std::string tomography_sampled_count;
};

CostReport cost_report(std::uint64_t m, std::uint64_t n, unsigned d_a,
                       unsigned d_b);

/// Smallest n in [2, n_max] from which the protocol count exceeds the
/// sampled-basis tomography count for every larger n up to n_max.
std::optional<std::uint64_t> cost_crossover(std::uint64_t m, unsigned d_a,
                                            unsigned d_b, std::uint64_t n_max);

} // namespace discordlab
