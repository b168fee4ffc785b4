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

#include "discordlab/cost.hpp"

#include <algorithm>

#include <boost/multiprecision/cpp_int.hpp>

#include "discordlab/error.hpp"

namespace discordlab {

using boost::multiprecision::cpp_int;

std::string to_decimal(u128 value) {
    if (value == 0) {
        return "0";
    }
    std::string digits;
    while (value > 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
        value /= 10;
    }
    std::reverse(digits.begin(), digits.end());
    return digits;
}

std::optional<u128> checked_mul(u128 a, u128 b) {
    u128 out;
    if (__builtin_mul_overflow(a, b, &out)) {
        return std::nullopt;
    }
    return out;
}

std::optional<u128> checked_pow(u128 base, unsigned exponent) {
    u128 out = 1;
    for (unsigned k = 0; k < exponent; ++k) {
        const auto next = checked_mul(out, base);
        if (!next) {
            return std::nullopt;
        }
        out = *next;
    }
    return out;
}

namespace {

void require_inputs(std::uint64_t m, std::uint64_t n, unsigned d_a,
                    unsigned d_b) {
    if (m < 1 || n < 1) {
        throw Error(ErrorKind::OutOfRange, "m and n must be at least 1");
    }
    if (d_a < 2 || d_b < 2) {
        throw Error(ErrorKind::OutOfRange, "subsystem dimensions must be >= 2");
    }
}

[[noreturn]] void overflow(const char *what, unsigned exponent) {
    throw Error(ErrorKind::CostOverflow,
                std::string(what) + " count overflows 128 bits (exponent " +
                    std::to_string(exponent) + ")");
}

cpp_int big_pow(std::uint64_t base, unsigned exponent) {
    return boost::multiprecision::pow(cpp_int(base), exponent);
}

} // namespace

unsigned protocol_exponent(unsigned d_a, unsigned d_b) {
    return d_a * d_a + d_b * d_b - d_a - d_b + 1;
}

unsigned tomography_sampled_exponent(unsigned d_a) { return d_a * d_a - d_a; }

std::uint64_t tomography_sampled_multiplier(unsigned d_a, unsigned d_b) {
    const std::uint64_t s = std::uint64_t{d_a} + d_b;
    return s * s - 1;
}

std::uint64_t tomography_fixed_multiplier(unsigned d_a, unsigned d_b) {
    const std::uint64_t p = std::uint64_t{d_a} * d_b;
    return p * p - 1;
}

u128 cost_protocol(std::uint64_t m, std::uint64_t n, unsigned d_a,
                   unsigned d_b) {
    require_inputs(m, n, d_a, d_b);
    const unsigned e = protocol_exponent(d_a, d_b);
    const auto power = checked_pow(n, e);
    const auto total = power ? checked_mul(m, *power) : std::nullopt;
    if (!total) {
        overflow("protocol", e);
    }
    return *total;
}

u128 cost_tomography(std::uint64_t m, std::uint64_t n, unsigned d_a,
                     unsigned d_b, bool sampled_basis) {
    require_inputs(m, n, d_a, d_b);
    if (!sampled_basis) {
        const auto total = checked_mul(tomography_fixed_multiplier(d_a, d_b), m);
        if (!total) {
            overflow("fixed-basis tomography", 0);
        }
        return *total;
    }
    const unsigned e = tomography_sampled_exponent(d_a);
    const auto power = checked_pow(n, e);
    auto total = power ? checked_mul(m, *power) : std::nullopt;
    if (total) {
        total = checked_mul(tomography_sampled_multiplier(d_a, d_b), *total);
    }
    if (!total) {
        overflow("sampled-basis tomography", e);
    }
    return *total;
}

CostReport cost_report(std::uint64_t m, std::uint64_t n, unsigned d_a,
                       unsigned d_b) {
    require_inputs(m, n, d_a, d_b);
    CostReport r{m, n, d_a, d_b, {}, {}, {}};
    r.protocol_count =
        (cpp_int(m) * big_pow(n, protocol_exponent(d_a, d_b))).str();
    r.tomography_fixed_count =
        (cpp_int(tomography_fixed_multiplier(d_a, d_b)) * m).str();
    r.tomography_sampled_count =
        (cpp_int(tomography_sampled_multiplier(d_a, d_b)) * m *
         big_pow(n, tomography_sampled_exponent(d_a)))
            .str();
    return r;
}

std::optional<std::uint64_t> cost_crossover(std::uint64_t m, unsigned d_a,
                                            unsigned d_b, std::uint64_t n_max) {
    require_inputs(m, 1, d_a, d_b);
    std::optional<std::uint64_t> start;
    for (std::uint64_t n = 2; n <= n_max; ++n) {
        const cpp_int protocol = cpp_int(m) * big_pow(n, protocol_exponent(d_a, d_b));
        const cpp_int tomo = cpp_int(tomography_sampled_multiplier(d_a, d_b)) *
                             m * big_pow(n, tomography_sampled_exponent(d_a));
        if (protocol > tomo) {
            if (!start) {
                start = n;
            }
        } else {
            start.reset();
        }
    }
    return start;
}

} // namespace discordlab
