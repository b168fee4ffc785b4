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

#include "discordlab/shots.hpp"

#include "discordlab/cost.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

namespace discordlab {

namespace {

constexpr double kPi = std::numbers::pi;

std::size_t nearest_index(const std::vector<double> &grid, double angle) {
    const double target = wrap_two_pi(angle);
    std::size_t best = 0;
    double best_d = 1e300;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        double d = std::abs(grid[k] - target);
        d = std::min(d, 2.0 * kPi - d);
        if (d < best_d) {
            best_d = d;
            best = k;
        }
    }
    return best;
}

} // namespace

Shots Shots::count(std::uint64_t m) {
    if (m == 0) {
        throw Error(ErrorKind::OutOfRange, "shot count must be at least 1");
    }
    Shots s;
    s.m_ = m;
    return s;
}

double sample_binary_mean(double expectation, Shots m, CounterRng &rng) {
    if (m.is_exact()) {
        return expectation;
    }
    const double p_plus = std::clamp((1.0 + expectation) / 2.0, 0.0, 1.0);
    const std::uint64_t shots = m.value();
    std::uint64_t plus = 0;
    if (p_plus >= 1.0) {
        plus = shots;
    } else if (p_plus > 0.0) {
        std::binomial_distribution<std::uint64_t> draw(shots, p_plus);
        plus = draw(rng);
    }
    return (2.0 * static_cast<double>(plus) - static_cast<double>(shots)) /
           static_cast<double>(shots);
}

double sample_expectation(const DensityMatrix &rho, const Mat4 &observable,
                          Shots m, RandomSeed seed) {
    std::array<double, 4> spectrum{};
    try {
        spectrum = hermitian_eigenvalues(observable);
    } catch (const Error &e) {
        throw Error(ErrorKind::UnsupportedObservable, e.what());
    }
    for (double lambda : spectrum) {
        if (std::abs(std::abs(lambda) - 1.0) > tol::kHermiticity) {
            std::ostringstream msg;
            msg << "observable eigenvalue " << lambda << " is not +-1";
            throw Error(ErrorKind::UnsupportedObservable, msg.str());
        }
    }
    CounterRng rng(seed);
    return sample_binary_mean((observable * rho.mat()).trace().real(), m, rng);
}

double FringeFit::amplitude() const {
    return std::hypot(cos_amplitude, sin_amplitude);
}

FringeFit fit_fringe(std::span<const double> values) {
    const std::size_t n = values.size();
    if (n < 2) {
        throw Error(ErrorKind::InvalidGrid, "fringe fit needs at least 2 phases");
    }
    // The constant, cosine and sine columns are mutually orthogonal on the
    // periodic grid, so the normal equations decouple.
    double sum = 0.0, yc = 0.0, ys = 0.0, cc = 0.0, ss = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double phase =
            2.0 * kPi * static_cast<double>(k) / static_cast<double>(n);
        const double c = std::cos(phase);
        const double s = n == 2 ? 0.0 : std::sin(phase);
        sum += values[k];
        yc += values[k] * c;
        ys += values[k] * s;
        cc += c * c;
        ss += s * s;
    }
    FringeFit fit;
    fit.offset = sum / static_cast<double>(n);
    fit.cos_amplitude = yc / cc;
    fit.sin_amplitude = ss > 0.0 ? ys / ss : 0.0;
    return fit;
}

double fringe_standard_error(std::size_t n_phases, std::uint64_t shots) {
    return std::sqrt(2.0 / (static_cast<double>(n_phases) *
                            static_cast<double>(shots)));
}

double estimate_visibility(const DensityMatrix &rho, const ProtocolParams &p,
                           std::size_t n_phases, Shots m, RandomSeed seed) {
    if (n_phases < 3) {
        throw Error(ErrorKind::OutOfRange, "estimate_visibility needs n_phases >= 3");
    }
    const Mat4 k_obs = fringe_observable();
    const CounterRng root(seed);
    std::vector<double> means(n_phases);
    for (std::size_t k = 0; k < n_phases; ++k) {
        ProtocolParams at = p;
        at.phi_d = 2.0 * kPi * static_cast<double>(k) /
                   static_cast<double>(n_phases);
        const double expectation =
            (k_obs * transformed_state(rho, at).mat()).trace().real();
        CounterRng rng = root.split(k);
        means[k] = sample_binary_mean(expectation, m, rng);
    }
    return fit_fringe(means).amplitude();
}

ProtocolRunResult protocol_run(const DensityMatrix &rho,
                               const ShotBudget &budget, RandomSeed seed,
                               const ProtocolRunOptions &options) {
    const std::uint64_t n = budget.n;
    if (n < 2) {
        throw Error(ErrorKind::OutOfRange, "protocol grid needs n >= 2");
    }
    if (!budget.m.is_exact()) {
        const auto planned = [&]() -> std::optional<u128> {
            const auto power = checked_pow(n, 5);
            return power ? checked_mul(budget.m.value(), *power) : std::nullopt;
        }();
        if (!options.override_resource_guard &&
            (!planned || *planned > kResourceGuardShots)) {
            std::ostringstream msg;
            msg << "m n^5 = "
                << (planned ? to_decimal(*planned) : std::string("> 2^128"))
                << " shots exceeds the limit of " << kResourceGuardShots
                << "; pass the override to run anyway";
            throw Error(ErrorKind::ResourceGuard, msg.str());
        }
        if (!planned || *planned > std::numeric_limits<std::uint64_t>::max()) {
            throw Error(ErrorKind::ResourceGuard,
                        "m n^5 does not fit a 64-bit shot counter");
        }
    }

    const auto alphas = linspace(0.0, kPi, n);
    const auto betas = linspace(0.0, kPi, n);
    const auto phis = periodic_grid(n);

    std::vector<Mat2> rot_ab(n * n); // [angle index][phase index]
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t f = 0; f < n; ++f) {
            rot_ab[i * n + f] = qubit_rotation_matrix({alphas[i], phis[f]});
        }
    }
    std::vector<std::complex<double>> phase_factor(n);
    for (std::size_t k = 0; k < n; ++k) {
        phase_factor[k] = std::polar(1.0, phis[k]);
    }

    const std::size_t nodes = n * n * n * n;
    ProtocolRunResult result;
    result.sweep.assign(nodes, 0.0);
    const CounterRng root(seed);

    // Node u = ((ia * n + ib) * n + ifa) * n + ifb; shot stream for phase k
    // is root.split(u * n + k).
    auto node = [&](std::size_t u) -> std::uint64_t {
        const std::size_t ifb = u % n;
        const std::size_t ifa = (u / n) % n;
        const std::size_t ib = (u / (n * n)) % n;
        const std::size_t ia = u / (n * n * n);
        const Mat4 rotated =
            apply_local(rho.mat(), rot_ab[ia * n + ifa], rot_ab[ib * n + ifb]);
        // <K>(phi_d) = 2 Re(e^{i phi_d} z) for the rotated state.
        const cplx z = rotated(0, 2) - rotated(1, 3);
        std::vector<double> means(n);
        for (std::size_t k = 0; k < n; ++k) {
            const double expectation = 2.0 * (phase_factor[k] * z).real();
            CounterRng rng = root.split(u * n + k);
            means[k] = sample_binary_mean(expectation, budget.m, rng);
        }
        result.sweep[u] = fit_fringe(means).amplitude();
        return budget.m.is_exact() ? 0 : n * budget.m.value();
    };
    std::uint64_t drawn = 0;
    if (options.execution == Execution::Parallel) {
        const auto total = static_cast<std::ptrdiff_t>(nodes);
#pragma omp parallel for schedule(static) reduction(+ : drawn)
        for (std::ptrdiff_t u = 0; u < total; ++u) {
            drawn += node(static_cast<std::size_t>(u));
        }
    } else {
        for (std::size_t u = 0; u < nodes; ++u) {
            drawn += node(u);
        }
    }
    if (!budget.m.is_exact()) {
        result.measurement_count = drawn;
    }

    const std::size_t sa = nearest_index(phis, options.phi_a);
    const std::size_t sb = nearest_index(phis, options.phi_b);
    VisibilityField &field = result.field;
    field.alpha_axis = alphas;
    field.beta_axis = betas;
    field.phi_a = phis[sa];
    field.phi_b = phis[sb];
    field.label = rho.label();
    field.mode = FieldMode::Sampled;
    if (!budget.m.is_exact()) {
        field.shots_per_point = budget.m.value();
    }
    field.values.resize(n * n);
    for (std::size_t ia = 0; ia < n; ++ia) {
        for (std::size_t ib = 0; ib < n; ++ib) {
            field.values[ia * n + ib] =
                result.sweep[((ia * n + ib) * n + sa) * n + sb];
        }
    }
    return result;
}

DensityMatrix project_physical(const Mat4 &raw, std::string label) {
    const double asym = max_hermitian_asymmetry(raw);
    if (!(asym <= tol::kHermiticity)) {
        std::ostringstream msg;
        msg << "raw reconstruction not Hermitian (max asymmetry " << asym << ")";
        throw Error(ErrorKind::NotHermitian, msg.str());
    }
    const double trace_dev = std::abs(raw.trace() - 1.0);
    if (!(trace_dev <= kReconstructionTraceTolerance)) {
        std::ostringstream msg;
        msg << "raw reconstruction trace deviates by " << trace_dev;
        throw Error(ErrorKind::ReconstructionFailed, msg.str());
    }
    auto eig = hermitian_eigen(raw);
    double total = 0.0;
    for (double &lambda : eig.eigenvalues) {
        lambda = std::max(lambda, 0.0);
        total += lambda;
    }
    if (!(total > 0.0)) {
        throw Error(ErrorKind::ReconstructionFailed,
                    "no positive spectral weight left after clipping");
    }
    for (double &lambda : eig.eigenvalues) {
        lambda /= total;
    }
    Mat4 out = eig.reconstruct();
    out = (out + out.adjoint()) * cplx(0.5);
    return DensityMatrix(out, std::move(label));
}

TomographyResult tomography(const DensityMatrix &rho, Shots m,
                            RandomSeed seed) {
    const CounterRng root(seed);
    std::array<double, 15> estimates{};
    for (std::size_t k = 0; k < 15; ++k) {
        const double expectation =
            (pauli_observable(k) * rho.mat()).trace().real();
        CounterRng rng = root.split(k);
        estimates[k] = sample_binary_mean(expectation, m, rng);
    }
    const PauliCoefficients coeffs = PauliCoefficients::from_flat(estimates);
    const Mat4 raw = pauli_reconstruct(coeffs);
    DensityMatrix projected = project_physical(raw, "tomography:" + rho.label());
    const double distance =
        std::clamp(trace_distance(projected.mat(), rho.mat()), 0.0, 1.0);
    std::optional<std::uint64_t> used;
    if (!m.is_exact()) {
        used = 15 * m.value();
    }
    return TomographyResult{coeffs, raw, std::move(projected), distance, used};
}

} // namespace discordlab
