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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "discordlab/discord.hpp"
#include "discordlab/error.hpp"
#include "discordlab/states.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace discordlab;

namespace {

constexpr double kPi = std::numbers::pi;

// Independent evaluation of the post-measurement conditional entropy with
// Eigen: project A onto the Bloch direction (theta, phi) and its antipode.
double oracle_conditional_entropy(const Mat4 &rho, double theta, double phi) {
    const Eigen::Matrix4cd r = oracle::to_eigen(rho);
    Eigen::Vector2cd up(std::cos(theta / 2.0),
                        std::polar(std::sin(theta / 2.0), phi));
    Eigen::Vector2cd down(-std::conj(up[1]), std::conj(up[0]));
    double total = 0.0;
    for (const auto &v : {up, down}) {
        const Eigen::Matrix2cd proj = v * v.adjoint();
        const Eigen::Matrix4cd p = oracle::kron(proj, Eigen::Matrix2cd::Identity());
        const Eigen::Matrix4cd post = p * r * p;
        const double prob = post.trace().real();
        if (prob < 1e-14) {
            continue;
        }
        // Partial trace over A.
        Eigen::Matrix2cd rb = post.block<2, 2>(0, 0) + post.block<2, 2>(2, 2);
        rb /= prob;
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(rb);
        std::vector<double> ev{es.eigenvalues()[0], es.eigenvalues()[1]};
        total += prob * oracle::entropy_bits(ev);
    }
    return total;
}

Mat2 random_unitary(std::mt19937_64 &gen) {
    const QubitRotation r = testutil::random_rotation(gen);
    const double global = testutil::uniform(gen, 0.0, 2.0 * kPi);
    return qubit_rotation_matrix(r) * std::polar(1.0, global);
}

} // namespace

TEST_CASE("mutual information examples") {
    CHECK(mutual_information(maximally_mixed()) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(mutual_information(werner(1.0)) == doctest::Approx(2.0).epsilon(1e-12));
    const DensityMatrix product(tensor(qubit_state({0, 0, 1}), qubit_state({1, 0, 0})));
    CHECK(std::abs(mutual_information(product)) < 1e-12);

    // Werner(0.5): 2 - S(rho).
    const double s = oracle::entropy_bits(oracle::eigenvalues(werner(0.5).mat()));
    CHECK(mutual_information(werner(0.5)) == doctest::Approx(2.0 - s).epsilon(1e-12));
}

TEST_CASE("conditional entropy matches an independent evaluation") {
    std::mt19937_64 gen(11);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const DensityMatrix rho = random_state({seed});
        for (int k = 0; k < 5; ++k) {
            const double theta = testutil::uniform(gen, 0.0, kPi);
            const double phi = testutil::uniform(gen, 0.0, 2.0 * kPi);
            CHECK(std::abs(conditional_entropy_after_measurement(rho, {theta, phi}) -
                           oracle_conditional_entropy(rho.mat(), theta, phi)) < 1e-10);
        }
    }
}

TEST_CASE("Werner conditional entropy is basis independent") {
    const DensityMatrix w = werner(0.5);
    const double expected = oracle::binary_entropy(0.75);
    std::mt19937_64 gen(5);
    double lo = 1e9, hi = -1e9;
    for (int k = 0; k < 50; ++k) {
        const double h = conditional_entropy_after_measurement(
            w, {testutil::uniform(gen, 0.0, kPi), testutil::uniform(gen, 0.0, 2.0 * kPi)});
        if (k < 10) {
            CHECK(h == doctest::Approx(expected).epsilon(1e-12));
        }
        lo = std::min(lo, h);
        hi = std::max(hi, h);
    }
    CHECK(hi - lo < 1e-10);
}

TEST_CASE("closed form examples") {
    // Direct evaluation of the entropy identity for the Werner family:
    // S(A) = 1, S(AB) from the spectrum, conditional entropy h((1+c)/2).
    auto reference = [](double c) {
        const std::vector<double> spec{(1.0 + 3.0 * c) / 4.0, (1.0 - c) / 4.0,
                                       (1.0 - c) / 4.0, (1.0 - c) / 4.0};
        return 1.0 - oracle::entropy_bits(spec) + oracle::binary_entropy((1.0 + c) / 2.0);
    };
    CHECK(werner_discord_closed(0.0) == 0.0);
    CHECK(werner_discord_closed(1.0) == doctest::Approx(1.0).epsilon(1e-15));
    for (double c : {0.1, 0.2, 0.5, 0.77, 0.9}) {
        CHECK(werner_discord_closed(c) == doctest::Approx(reference(c)).epsilon(1e-13));
    }
    CHECK(werner_discord_closed(0.5) == doctest::Approx(0.262483).epsilon(1e-6));
    CHECK(werner_discord_closed(0.2) == doctest::Approx(0.049023).epsilon(1e-6));
    CHECK_THROWS_AS(werner_discord_closed(1.01), Error);
    CHECK_THROWS_AS(werner_discord_closed(-0.01), Error);
}

TEST_CASE("closed form is increasing and nonlinear") {
    double prev = werner_discord_closed(0.0);
    double max_chord = 0.0;
    bool increasing = true;
    for (int k = 1; k <= 1000; ++k) {
        const double c = k / 1000.0;
        const double q = werner_discord_closed(c);
        increasing = increasing && q > prev;
        prev = q;
        max_chord = std::max(max_chord, std::abs(q - c));
    }
    CHECK(increasing);
    CHECK(max_chord > 0.2);
}

TEST_CASE("numerical discord agrees with the closed form") {
    for (int k = 1; k <= 10; ++k) {
        const double c = k / 10.0;
        const DiscordResult r = discord(werner(c));
        CAPTURE(c);
        CHECK(std::abs(r.value - werner_discord_closed(c)) < 1e-4);
    }
    CHECK(discord(werner(0.5)).value == doctest::Approx(0.262483).epsilon(1e-5));
    CHECK(discord(werner(1.0)).value == doctest::Approx(1.0).epsilon(1e-5));
    CHECK(discord(maximally_mixed()).value < 1e-9);
}

TEST_CASE("zero-discord states have vanishing discord") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        CAPTURE(seed);
        CHECK(discord(zero_discord_state({seed})).value < 1e-6);
    }
}

TEST_CASE("discord is nonnegative and bounded by mutual information") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const DensityMatrix rho = random_state({seed});
        const DiscordResult r = discord(rho);
        CAPTURE(seed);
        CHECK(r.value >= 0.0);
        CHECK(r.value <= mutual_information(rho) + 1e-9);
        CHECK(r.spread < 1e-10);
    }
}

TEST_CASE("discord is invariant under local unitaries") {
    std::mt19937_64 gen(2024);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const DensityMatrix rho = random_state({seed + 1000});
        const DensityMatrix moved(
            apply_local(rho.mat(), random_unitary(gen), random_unitary(gen)));
        CHECK(std::abs(discord(rho).value - discord(moved).value) < 2e-4);
    }
}

TEST_CASE("serial and parallel grids agree exactly") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const DensityMatrix rho = random_state({seed});
        CHECK(conditional_entropy_grid(rho, 32, 64, Execution::Parallel) ==
              conditional_entropy_grid(rho, 32, 64, Execution::Serial));
        DiscordOptions serial;
        serial.execution = Execution::Serial;
        CHECK(discord(rho).value == discord(rho, serial).value);
    }
    CHECK_THROWS_AS(conditional_entropy_grid(werner(0.1), 0, 4, Execution::Serial), Error);
}

TEST_CASE("non-convergence is reported") {
    DiscordOptions tight;
    tight.simplex.max_iterations = 2;
    try {
        discord(random_state({3}), tight);
        FAIL("expected non-convergence");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::NotConverged);
        CHECK(std::string(e.what()).find("spread") != std::string::npos);
    }
}
