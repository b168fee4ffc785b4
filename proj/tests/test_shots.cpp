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

#include <cmath>
#include <numbers>

#include "discordlab/discord.hpp"
#include "discordlab/error.hpp"
#include "discordlab/shots.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace discordlab;
using testutil::max_abs_diff;

namespace {

constexpr double kPi = std::numbers::pi;

double rmse_visibility(std::uint64_t m) {
    const DensityMatrix w = werner(0.5);
    const ProtocolParams p{kPi / 2, 0, 0, 0, 0};
    double sum = 0.0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const double e = estimate_visibility(w, p, 16, Shots::count(m), {seed}) - 0.5;
        sum += e * e;
    }
    return std::sqrt(sum / 50.0);
}

double mean_tomography_distance(std::uint64_t m) {
    const DensityMatrix w = werner(0.5);
    double sum = 0.0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        sum += tomography(w, Shots::count(m), {seed}).trace_distance_to_truth;
    }
    return sum / 50.0;
}

} // namespace

TEST_CASE("shot counts") {
    CHECK(Shots::exact().is_exact());
    CHECK(Shots::count(7).value() == 7);
    CHECK_THROWS_AS(Shots::count(0), Error);
}

TEST_CASE("binary sampling") {
    const Mat4 k = fringe_observable();
    const DensityMatrix eigen(tensor(qubit_state({1, 0, 0}), qubit_state({0, 0, 1})));
    for (std::uint64_t m : {1ULL, 17ULL, 1000ULL}) {
        CHECK(sample_expectation(eigen, k, Shots::count(m), {m}) == 1.0);
    }

    CHECK(std::abs(sample_expectation(maximally_mixed(), k, Shots::count(1'000'000), {1})) <
          0.004);
    CHECK(sample_expectation(werner(0.4), k, Shots::count(100), {5}) ==
          sample_expectation(werner(0.4), k, Shots::count(100), {5}));
    CHECK(sample_expectation(werner(0.4), tensor(pauli::Z, pauli::Z), Shots::exact(), {5}) ==
          doctest::Approx(-0.4).epsilon(1e-14));

    try {
        sample_expectation(werner(0.4), k * cplx(2.0), Shots::count(10), {1});
        FAIL("expected unsupported observable");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::UnsupportedObservable);
    }

    // Mean of a binomial draw: five standard errors around the expectation.
    CounterRng rng({77});
    double acc = 0.0;
    for (int k2 = 0; k2 < 1000; ++k2) {
        acc += sample_binary_mean(0.3, Shots::count(100), rng);
    }
    CHECK(std::abs(acc / 1000.0 - 0.3) < 5.0 * std::sqrt(0.91 / 100.0 / 1000.0));
}

TEST_CASE("fringe fit") {
    const auto phases = periodic_grid(10);
    std::vector<double> y;
    for (double ph : phases) {
        y.push_back(0.1 + 0.3 * std::cos(ph) - 0.4 * std::sin(ph));
    }
    const FringeFit fit = fit_fringe(y);
    CHECK(fit.offset == doctest::Approx(0.1).epsilon(1e-14));
    CHECK(fit.cos_amplitude == doctest::Approx(0.3).epsilon(1e-14));
    CHECK(fit.sin_amplitude == doctest::Approx(-0.4).epsilon(1e-14));
    CHECK(fit.amplitude() == doctest::Approx(0.5).epsilon(1e-14));

    const std::vector<double> two{0.7, -0.1};
    CHECK(fit_fringe(two).cos_amplitude == doctest::Approx(0.4));
    CHECK(fit_fringe(two).sin_amplitude == 0.0);
    CHECK(fringe_standard_error(16, 10000) == doctest::Approx(std::sqrt(2.0 / 160000.0)));
}

TEST_CASE("visibility estimation") {
    const DensityMatrix w = werner(0.5);
    const ProtocolParams p{kPi / 2, 0, 0, 0, 0};
    CHECK(std::abs(estimate_visibility(w, p, 16, Shots::count(10000), {3}) - 0.5) < 0.025);

    std::mt19937_64 gen(12);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const DensityMatrix rho = random_state({seed});
        const ProtocolParams q{testutil::uniform(gen, 0, kPi), testutil::uniform(gen, 0, 2 * kPi),
                               testutil::uniform(gen, 0, kPi), testutil::uniform(gen, 0, 2 * kPi),
                               0};
        CHECK(std::abs(estimate_visibility(rho, q, 8, Shots::exact(), {seed}) -
                       visibility_exact(rho, q)) < 1e-12);
    }

    const double se = fringe_standard_error(16, 10000);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        CHECK(estimate_visibility(maximally_mixed(), p, 16, Shots::count(10000), {seed}) <
              3.0 * se);
    }

    CHECK(estimate_visibility(w, p, 16, Shots::count(500), {8}) ==
          estimate_visibility(w, p, 16, Shots::count(500), {8}));
    CHECK_THROWS_AS(estimate_visibility(w, p, 2, Shots::count(10), {1}), Error);
}

TEST_CASE("visibility error shrinks as one over root m") {
    const std::vector<double> m{100, 1000, 10000};
    std::vector<double> lx, ly;
    for (double v : m) {
        lx.push_back(std::log(v));
        ly.push_back(std::log(rmse_visibility(static_cast<std::uint64_t>(v))));
    }
    CHECK(std::abs(oracle::slope(lx, ly) + 0.5) < 0.1);
}

TEST_CASE("protocol run") {
    const auto big = protocol_run(werner(0.5), {Shots::count(100), 10}, {1});
    REQUIRE(big.measurement_count.has_value());
    CHECK(*big.measurement_count == 10'000'000ULL);
    CHECK(big.sweep.size() == 10'000);
    CHECK(big.field.mode == FieldMode::Sampled);
    CHECK(big.field.shots_per_point == 100);

    const auto tiny = protocol_run(werner(0.5), {Shots::count(1), 2}, {1});
    CHECK(*tiny.measurement_count == 32);

    const auto exact = protocol_run(werner(0.5), {Shots::exact(), 6}, {1});
    CHECK_FALSE(exact.measurement_count.has_value());
    const auto axis = linspace(0.0, kPi, 6);
    const auto phases = periodic_grid(6);
    std::size_t u = 0;
    double worst = 0.0;
    for (double a : axis) {
        for (double b : axis) {
            for (double pa : phases) {
                for (double pb : phases) {
                    worst = std::max(worst, std::abs(exact.sweep[u++] -
                                                     werner_visibility_closed(0.5, a, b, pa, pb)));
                }
            }
        }
    }
    CHECK(worst < 1e-12);

    try {
        protocol_run(werner(0.5), {Shots::count(10000), 21}, {1});
        FAIL("expected the resource guard");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::ResourceGuard);
    }

    const auto s = protocol_run(random_state({4}), {Shots::count(50), 5}, {9},
                                {0, 0, false, Execution::Serial});
    const auto p = protocol_run(random_state({4}), {Shots::count(50), 5}, {9},
                                {0, 0, false, Execution::Parallel});
    CHECK(s.sweep == p.sweep);
    CHECK(s.measurement_count == p.measurement_count);
}

TEST_CASE("sampled Werner zero set hugs the diagonal") {
    ProtocolRunOptions opts;
    opts.override_resource_guard = true;
    const std::uint64_t m = 10000;
    const std::size_t n = 21;
    const auto run = protocol_run(werner(0.5), {Shots::count(m), n}, {2026}, opts);
    CHECK(*run.measurement_count == m * n * n * n * n * n);
    const double threshold = sampled_zero_threshold(m);
    const auto &f = run.field;
    std::size_t below = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (f.at(i, j) < threshold) {
                ++below;
                // Distance to alpha = beta (mod pi) in grid cells.
                const auto d = static_cast<std::size_t>(std::abs(
                    static_cast<long>(i) - static_cast<long>(j)));
                CHECK(std::min(d, n - 1 - d) <= 2);
            }
        }
    }
    CHECK(below >= n);
}

TEST_CASE("project_physical") {
    const DensityMatrix rho = random_state({3});
    CHECK(max_abs_diff(project_physical(rho.mat()).mat(), rho.mat()) < 1e-12);

    const Mat4 clipped = project_physical(Mat4::diagonal({0.6, 0.5, -0.1, 0.0})).mat();
    CHECK(clipped(0, 0).real() == doctest::Approx(0.6 / 1.1).epsilon(1e-12));
    CHECK(clipped(1, 1).real() == doctest::Approx(0.5 / 1.1).epsilon(1e-12));
    CHECK(std::abs(clipped(2, 2)) < 1e-12);
    CHECK(clipped(0, 0).real() == doctest::Approx(0.5455).epsilon(1e-4));

    const Mat4 nudged = rho.mat() + tensor(pauli::Z, pauli::Z) * cplx(1e-12);
    CHECK(max_abs_diff(project_physical(nudged).mat(), rho.mat()) < 1e-11);

    try {
        project_physical(Mat4::identity() * cplx(0.3));
        FAIL("expected reconstruction failure");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::ReconstructionFailed);
    }
}

TEST_CASE("tomography") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const DensityMatrix rho = random_state({seed});
        const auto exact = tomography(rho, Shots::exact(), {seed});
        CHECK(max_abs_diff(exact.projected.mat(), rho.mat()) < 1e-12);
        CHECK(exact.trace_distance_to_truth < 1e-12);
    }

    const auto t = tomography(werner(0.5), Shots::count(100), {1});
    REQUIRE(t.shots_used.has_value());
    CHECK(*t.shots_used == 1500);
    CHECK(tomography(werner(0.5), Shots::count(100), {1}).raw == t.raw);

    int close = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto r = tomography(werner(0.5), Shots::count(100000), {seed});
        close += r.trace_distance_to_truth < 0.02;
        REQUIRE(r.trace_distance_to_truth >= 0.0);
        REQUIRE(r.trace_distance_to_truth <= 1.0);
    }
    CHECK(close >= 95);

    const auto fine = tomography(werner(0.5), Shots::count(1'000'000), {7});
    CHECK(std::abs(discord(fine.projected).value - 0.2625) < 0.01);
}

TEST_CASE("tomography error shrinks as one over root m") {
    std::vector<double> lx, ly;
    for (double m : {100.0, 1000.0, 10000.0}) {
        lx.push_back(std::log(m));
        ly.push_back(std::log(mean_tomography_distance(static_cast<std::uint64_t>(m))));
    }
    CHECK(std::abs(oracle::slope(lx, ly) + 0.5) < 0.1);
}
