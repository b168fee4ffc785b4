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

#include "discordlab/discord.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

namespace discordlab {

namespace {

constexpr double kPi = std::numbers::pi;

std::array<cplx, 2> basis_vector(const MeasurementBasis &basis,
                                 std::size_t outcome) {
    const double c = std::cos(basis.theta / 2.0);
    const double s = std::sin(basis.theta / 2.0);
    const cplx e = std::polar(1.0, basis.phi);
    if (outcome == 0) {
        return {c, e * s};
    }
    return {-std::conj(e) * s, c};
}

// <v|_A rho |v>_A: the unnormalized B state after outcome v on A.
Mat2 conditioned_b_block(const Mat4 &rho, const std::array<cplx, 2> &v) {
    Mat2 out;
    for (std::size_t x = 0; x < 2; ++x) {
        for (std::size_t y = 0; y < 2; ++y) {
            const cplx w = std::conj(v[x]) * v[y];
            for (std::size_t k = 0; k < 2; ++k) {
                for (std::size_t l = 0; l < 2; ++l) {
                    out(k, l) += w * rho(2 * x + k, 2 * y + l);
                }
            }
        }
    }
    return out;
}

double conditional_entropy(const Mat4 &rho, const MeasurementBasis &basis) {
    double total = 0.0;
    for (std::size_t j = 0; j < 2; ++j) {
        const Mat2 block = conditioned_b_block(rho, basis_vector(basis, j));
        const double p = block.trace().real();
        if (p < kProbabilityFloor) {
            continue;
        }
        const auto lambda = hermitian_eigenvalues(Mat2(block * cplx(1.0 / p)));
        total += p * entropy_of_spectrum(lambda);
    }
    return total;
}

MeasurementBasis grid_basis(std::size_t i, std::size_t j, std::size_t nt,
                            std::size_t np) {
    const double theta = nt > 1 ? kPi * static_cast<double>(i) /
                                      static_cast<double>(nt - 1)
                                : 0.0;
    const double phi =
        2.0 * kPi * static_cast<double>(j) / static_cast<double>(np);
    return {theta, phi};
}

} // namespace

Mat2 MeasurementBasis::projector(std::size_t outcome) const {
    const auto v = basis_vector(*this, outcome);
    Mat2 p;
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) {
            p(r, c) = v[r] * std::conj(v[c]);
        }
    }
    return p;
}

double mutual_information(const DensityMatrix &rho) {
    return von_neumann_entropy(partial_trace(rho.mat(), Subsystem::A)) +
           von_neumann_entropy(partial_trace(rho.mat(), Subsystem::B)) -
           von_neumann_entropy(rho.mat());
}

double conditional_entropy_after_measurement(const DensityMatrix &rho,
                                             const MeasurementBasis &basis) {
    return conditional_entropy(rho.mat(), basis);
}

std::vector<double> conditional_entropy_grid(const DensityMatrix &rho,
                                             std::size_t grid_theta,
                                             std::size_t grid_phi,
                                             Execution execution) {
    if (grid_theta == 0 || grid_phi == 0) {
        throw Error(ErrorKind::InvalidGrid, "empty measurement grid");
    }
    const Mat4 &m = rho.mat();
    const auto total = static_cast<std::ptrdiff_t>(grid_theta * grid_phi);
    std::vector<double> values(static_cast<std::size_t>(total));
    if (execution == Execution::Parallel) {
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t k = 0; k < total; ++k) {
            const auto u = static_cast<std::size_t>(k);
            values[u] = conditional_entropy(
                m, grid_basis(u / grid_phi, u % grid_phi, grid_theta, grid_phi));
        }
    } else {
        for (std::size_t u = 0; u < values.size(); ++u) {
            values[u] = conditional_entropy(
                m, grid_basis(u / grid_phi, u % grid_phi, grid_theta, grid_phi));
        }
    }
    return values;
}

DiscordResult discord(const DensityMatrix &rho, const DiscordOptions &options) {
    const std::size_t nt = options.grid_theta;
    const std::size_t np = options.grid_phi;
    const auto grid = conditional_entropy_grid(rho, nt, np, options.execution);

    // Lexicographic (theta, phi) index order breaks ties.
    std::vector<std::size_t> idx(grid.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    const std::size_t starts = std::min(options.refine_starts, idx.size());
    std::partial_sort(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(starts),
                      idx.end(), [&](std::size_t a, std::size_t b) {
                          return grid[a] < grid[b] ||
                                 (grid[a] == grid[b] && a < b);
                      });

    const Mat4 &m = rho.mat();
    auto objective = [&m](const Point2 &p) {
        return conditional_entropy(m, MeasurementBasis{p[0], p[1]});
    };
    const double dt = nt > 1 ? kPi / static_cast<double>(nt - 1) : kPi;
    const double dp = 2.0 * kPi / static_cast<double>(np);

    SimplexResult best;
    bool have_best = false;
    int iterations = 0;
    for (std::size_t s = 0; s < starts; ++s) {
        const MeasurementBasis b0 = grid_basis(idx[s] / np, idx[s] % np, nt, np);
        const Point2 p0{b0.theta, b0.phi};
        const std::array<Point2, 3> simplex{
            p0, Point2{p0[0] + dt / 2.0, p0[1]}, Point2{p0[0], p0[1] + dp / 2.0}};
        SimplexResult run = nelder_mead(objective, simplex, options.simplex);
        iterations += run.iterations;
        // A run may not end above its own starting grid value.
        if (grid[idx[s]] < run.value) {
            run.value = grid[idx[s]];
            run.argmin = p0;
        }
        if (!have_best || run.value < best.value) {
            best = run;
            have_best = true;
        }
    }
    if (!best.converged) {
        std::ostringstream msg;
        msg.precision(12);
        msg << "simplex refinement did not converge: best conditional entropy "
            << best.value << ", spread " << best.spread;
        throw Error(ErrorKind::NotConverged, msg.str());
    }

    DiscordResult result;
    result.min_conditional_entropy = best.value;
    result.argmin_basis = {best.argmin[0], best.argmin[1]};
    result.iterations = iterations;
    result.spread = best.spread;
    const double value =
        von_neumann_entropy(partial_trace(m, Subsystem::A)) -
        von_neumann_entropy(m) + best.value;
    if (value < -kDiscordClipTolerance) {
        std::ostringstream msg;
        msg << "negative discord " << value;
        throw Error(ErrorKind::InternalConsistency, msg.str());
    }
    result.value = std::max(value, 0.0);
    return result;
}

double werner_discord_closed(double c) {
    if (!(c >= 0.0 && c <= 1.0)) {
        std::ostringstream msg;
        msg << "Werner parameter " << c << " outside [0, 1]";
        throw Error(ErrorKind::OutOfRange, msg.str());
    }
    const double first = c < 1.0 ? (1.0 - c) / 4.0 * std::log2(1.0 - c) : 0.0;
    return first - (1.0 + c) / 2.0 * std::log2(1.0 + c) +
           (1.0 + 3.0 * c) / 4.0 * std::log2(1.0 + 3.0 * c);
}

} // namespace discordlab
